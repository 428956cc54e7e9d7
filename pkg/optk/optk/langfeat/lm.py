import math
from collections import Counter

from ..app.errors import EmptyDomainError, UndefinedValueError
from ..app.logger import get_logger
from .text import tokenize

BOS = '<s>'
UNK = '<unk>'


class LanguageModel():
    """Interpolated add-k n-gram model.

    P1(w)   = (c(w) + k) / (N + k|V|)
    Pm(w|h) = (c(h, w) + k|V| Pm-1(w|h')) / (c(h) + k|V|),   h' = h without its oldest token

    c(h) is the number of times h precedes an in-vocabulary token, so every
    level sums to one over the vocabulary. Out-of-vocabulary tokens are never
    predicted; inside histories they read as <unk>. Read-only after training.
    """

    def __init__(self, order, k, min_count, vocab, ngram_counts, context_counts):
        self.order = order
        self.k = k
        self.min_count = min_count
        self.vocab = frozenset(vocab)
        self._ngrams = [dict(c) for c in ngram_counts]
        self._contexts = [dict(c) for c in context_counts]

    @property
    def vocab_size(self):
        return len(self.vocab)

    def is_oov(self, token):
        return token not in self.vocab

    def _history(self, history):
        if self.order == 1:
            return ()
        history = [h if h == BOS or h in self.vocab else UNK for h in history[-(self.order - 1):]]
        return (BOS,) * (self.order - 1 - len(history)) + tuple(history)

    def prob(self, word, history=()):
        if word not in self.vocab:
            raise UndefinedValueError(f'"{word}" is out of vocabulary')
        kv = self.k * self.vocab_size
        history = self._history(history)
        p = (self._ngrams[0].get((word,), 0) + self.k) / (self._contexts[0].get((), 0) + kv)
        for m in range(2, self.order + 1):
            h = history[len(history) - (m - 1):]
            p = (self._ngrams[m - 1].get(h + (word,), 0) + kv * p) / (self._contexts[m - 1].get(h, 0) + kv)
        return p

    def score(self, tokens):
        """log10 probability of the in-vocabulary tokens, token count, OOV count."""
        logprob = 0.0
        oovs = 0
        history = []
        for tok in tokens:
            if tok in self.vocab:
                logprob += math.log10(self.prob(tok, history))
            else:
                oovs += 1
            history.append(tok)
        return logprob, len(tokens), oovs


def train_lm(corpus, order=3, k=0.1, min_count=2):
    if order < 1:
        raise ValueError(f'order must be >= 1, got {order}')
    if not k > 0:
        raise ValueError(f'k must be > 0, got {k}')

    streams = [tokenize(msg.body) for msg in corpus]
    unigrams = Counter(tok for tokens in streams for tok in tokens)
    if not unigrams:
        raise EmptyDomainError('cannot train a language model on an empty tokenized corpus')
    vocab = {tok for tok, c in unigrams.items() if c >= min_count}
    if not vocab:
        raise EmptyDomainError(f'no token reaches min_count={min_count}')

    ngrams = [Counter() for _ in range(order)]
    contexts = [Counter() for _ in range(order)]
    for tokens in streams:
        seq = [BOS] * (order - 1) + [t if t in vocab else UNK for t in tokens]
        for pos in range(order - 1, len(seq)):
            word = seq[pos]
            if word == UNK:
                continue
            for m in range(1, order + 1):
                h = tuple(seq[pos - (m - 1):pos])
                ngrams[m - 1][h + (word,)] += 1
                contexts[m - 1][h] += 1

    get_logger().log('LangFeat', f'Trained order-{order} add-k LM (k={k}): |V|={len(vocab)}, '
                                 f'{sum(unigrams.values())} tokens, {len(unigrams) - len(vocab)} types below min_count')
    return LanguageModel(order, k, min_count, vocab, ngrams, contexts)


def perplexity_score(lm, messages):
    """10^(-log10prob / (words - oovs + 1)) over the concatenated token stream of all bodies."""
    if not messages:
        raise ValueError('perplexity needs at least one message')
    tokens = [tok for msg in messages for tok in tokenize(msg.body)]
    logprob, words, oovs = lm.score(tokens)
    if words - oovs == 0:
        raise UndefinedValueError('quality-undefined: no in-vocabulary token', words=words, oovs=oovs)
    return 10.0 ** (-logprob / (words - oovs + 1))
