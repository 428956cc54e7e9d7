import re

_TOKEN = re.compile(r'[a-z0-9]+')
_SENTENCE_BREAK = re.compile(r'[.!?\n]')


def tokenize(body):
    """Lowercased maximal [a-z0-9]+ runs."""
    return _TOKEN.findall((body or '').lower())


def split_sentences(body):
    # whitespace-only segments are empty
    return [s for s in _SENTENCE_BREAK.split(body or '') if s.strip()]
