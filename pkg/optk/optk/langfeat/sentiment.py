import os
from collections.abc import Mapping

from ..app.errors import ConfigError, MissingInputError, UndefinedValueError
from ..app.logger import get_logger
from .text import tokenize, split_sentences


class SentimentLexicon(Mapping):
    """Read-only word -> polarity map with lowercase keys."""

    def __init__(self, polarities):
        self._polarities = {}
        for word, value in polarities.items():
            self._polarities[word.strip().lower()] = float(value)

    def __getitem__(self, word):
        return self._polarities[word]

    def __iter__(self):
        return iter(self._polarities)

    def __len__(self):
        return len(self._polarities)

    def polarity(self, token):
        return self._polarities.get(token, 0.0)


def load_lexicon(path):
    """TSV 'word<TAB>polarity'; '#' lines are comments."""
    if not os.path.isfile(path):
        raise MissingInputError(f'lexicon file does not exist: {path}')
    polarities = {}
    with open(path, 'r', encoding='utf-8') as fin:
        for lineno, line in enumerate(fin, 1):
            line = line.rstrip('\r\n')
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            cols = line.split('\t')
            if len(cols) != 2:
                raise ConfigError(f'{path}:{lineno}: expected "word<TAB>polarity"')
            word = cols[0].strip().lower()
            try:
                value = float(cols[1])
            except ValueError:
                raise ConfigError(f'{path}:{lineno}: polarity "{cols[1]}" is not a number')
            if word in polarities:
                get_logger().warning('LangFeat', f'{path}:{lineno}: "{word}" listed twice, keeping the last value')
            polarities[word] = value
    return SentimentLexicon(polarities)


def sentiment_score(lex, messages):
    """W / S: summed polarity of lexicon hits over the sentence count of all bodies."""
    if not messages:
        raise ValueError('sentiment needs at least one message')
    n_sentences = 0
    weight = 0.0
    for msg in messages:
        n_sentences += len(split_sentences(msg.body))
        weight += sum(lex.polarity(tok) for tok in tokenize(msg.body))
    if n_sentences == 0:
        raise UndefinedValueError('sentiment-undefined: no sentence')
    return weight / n_sentences
