from .message import Message, PairStats, PairIndex, normalize_address, parse_timestamp, format_timestamp
from .io import ParseReport, SkipRecord, parse_jsonl, read_jsonl, write_jsonl, parse_maildir, parse_mail_file
from .filter import filter_corpus
from .synthetic import make_synthetic_corpus
