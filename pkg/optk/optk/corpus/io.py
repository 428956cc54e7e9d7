import os
import json
import email
import email.policy
from email.utils import getaddresses, parsedate_to_datetime
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from tqdm import tqdm

from ..app.errors import MalformedInputError, MissingInputError
from ..app.logger import get_logger
from .message import Message, normalize_address, parse_timestamp

JSONL_KEYS = ('id', 'from', 'to', 'timestamp', 'body')


@dataclass
class SkipRecord:
    location: str
    reason: str


@dataclass
class ParseReport:
    source: str
    parsed: int = 0
    skipped: list = field(default_factory=list)

    def skip(self, location, reason):
        self.skipped.append(SkipRecord(str(location), reason))

    def summary(self):
        return f'{self.source}: {self.parsed} parsed, {len(self.skipped)} skipped'


def _record_to_message(record):
    if not isinstance(record, dict):
        raise ValueError('line is not a JSON object')
    missing = [k for k in JSONL_KEYS if k not in record]
    if missing:
        raise ValueError(f'missing keys {missing}')
    if not isinstance(record['to'], list) or not all(isinstance(r, str) for r in record['to']):
        raise ValueError('"to" must be a list of strings')
    if not isinstance(record['body'], str):
        raise ValueError('"body" must be a string')
    sender = normalize_address(record['from'])
    if not sender:
        raise ValueError('empty sender')
    recipients = [normalize_address(r) for r in record['to']]
    return Message(id=str(record['id']),
                   sender=sender,
                   recipients=tuple(r for r in recipients if r),
                   timestamp=parse_timestamp(record['timestamp']),
                   body=record['body'])


def parse_jsonl(stream, strict=False, source='<stream>'):
    """Parse canonical JSON Lines (bytes or text stream).

    Malformed lines are skipped and recorded in the report, or abort the
    parse in strict mode. Blank lines are ignored.
    """
    msgs = []
    report = ParseReport(source)
    for lineno, line in enumerate(stream, 1):
        try:
            if isinstance(line, bytes):
                line = line.decode('utf-8')
            if not line.strip():
                continue
            msgs.append(_record_to_message(json.loads(line)))
        except (ValueError, TypeError) as e:
            # JSONDecodeError and UnicodeDecodeError are ValueErrors
            if strict:
                raise MalformedInputError(f'{source}: malformed line {lineno}: {e}', line=lineno)
            report.skip(lineno, str(e))
    report.parsed = len(msgs)
    if report.skipped:
        get_logger().warning('Corpus', f'{report.summary()}')
    return msgs, report


def read_jsonl(path, strict=False):
    if not os.path.isfile(path):
        raise MissingInputError(f'corpus file does not exist: {path}')
    with open(path, 'rb') as fin:
        return parse_jsonl(fin, strict=strict, source=path)


def write_jsonl(msgs, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as fout:
        for msg in sorted(msgs, key=lambda m: m.id):
            fout.write(json.dumps(msg.to_record(), ensure_ascii=False) + '\n')
    return path


def _message_body(mail):
    if mail.is_multipart():
        for part in mail.walk():
            if part.get_content_type() == 'text/plain' and not part.is_multipart():
                mail = part
                break
        else:
            return ''
    payload = mail.get_payload(decode=True)
    if payload is None:
        return ''
    charset = mail.get_content_charset() or 'utf-8'
    try:
        return payload.decode(charset, errors='replace')
    except LookupError:
        return payload.decode('utf-8', errors='replace')


def parse_mail_file(root, relpath, recipient_fields=('to', 'cc')):
    """Parse one RFC-822 file. Returns (Message, None) or (None, reason)."""
    try:
        with open(os.path.join(root, relpath), 'rb') as fin:
            mail = email.message_from_binary_file(fin, policy=email.policy.compat32)
    except OSError as e:
        return None, f'unreadable: {e}'

    sender = normalize_address(mail['From'])
    if not sender:
        return None, 'no parseable From header'
    to_headers = [str(h) for h in mail.get_all('To', [])]
    if not [a for _, a in getaddresses(to_headers) if a.strip()]:
        return None, 'no parseable To header'
    try:
        timestamp = parse_timestamp(parsedate_to_datetime(str(mail['Date'])))
    except (TypeError, ValueError, IndexError):
        return None, 'no parseable Date header'

    recipients = []
    for fname in recipient_fields:
        headers = [str(h) for h in mail.get_all(fname, [])]
        for _, addr in getaddresses(headers):
            addr = addr.strip().lower()
            if addr and addr not in recipients:
                recipients.append(addr)

    msg_id = (mail['Message-ID'] or '').strip() or relpath.replace(os.sep, '/')
    return Message(id=msg_id, sender=sender, recipients=tuple(recipients),
                   timestamp=timestamp, body=_message_body(mail)), None


def _list_files(root):
    if not os.path.isdir(root):
        raise MissingInputError(f'maildir root is not a readable directory: {root}')

    def fail(err):
        raise MissingInputError(f'cannot read maildir: {err}')

    files = []
    for dirpath, dirnames, filenames in os.walk(root, onerror=fail):
        dirnames.sort()
        for fn in sorted(filenames):
            if fn.startswith('.'):
                continue
            files.append(os.path.relpath(os.path.join(dirpath, fn), root))
    return files


def parse_maildir(root, num_workers=1, recipient_fields=('to', 'cc')):
    """Parse a CMU-Enron style maildir tree; output sorted by message id."""
    files = _list_files(root)
    job = partial(parse_mail_file, root, recipient_fields=tuple(recipient_fields))
    if num_workers > 1:
        with Pool(num_workers) as pool:
            results = list(tqdm(pool.imap(job, files, chunksize=64), total=len(files),
                                desc='[Corpus] maildir', disable=None))
    else:
        results = [job(fn) for fn in tqdm(files, desc='[Corpus] maildir', disable=None)]

    report = ParseReport(root)
    msgs = []
    for relpath, (msg, reason) in zip(files, results):
        if msg is None:
            report.skip(relpath, reason)
        else:
            msgs.append(msg)
    msgs.sort(key=lambda m: m.id)
    report.parsed = len(msgs)
    get_logger().log('Corpus', report.summary())
    return msgs, report
