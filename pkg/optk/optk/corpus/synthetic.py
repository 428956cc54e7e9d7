"""Deterministic 12-person email corpus used by the tests and create_synthetic.py.

Graph (mutual pairs): a K4 core p01-p04, two triangles hanging off p01
(p01 p05 p06, p05 p06 p07), a triangle p08 p09 p10 bridged to p02, p11 closing
a triangle on p03 p04, and a leaf p12 on p10 whose messages are all empty.
Noise that the filters must drop: an outside sender, a self-loop, a one-way
pair p12 -> p11 and a duplicated message id.
"""
from datetime import datetime, timedelta, timezone

from .message import Message

DOMAIN = '@synthetic.org'

SENTENCES = [
    'thanks for the great report',
    'the meeting went well and the numbers look good',
    'please send the contract today',
    'this is a bad problem and we need a fix',
    'i am worried about the late delivery',
    'excellent work on the deal',
    'can we talk tomorrow about the schedule',
    'the price is wrong and the customer is angry',
    'happy to help with the review',
    'the trading desk had a terrible week',
]

EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
         (1, 5), (5, 6), (1, 6), (6, 7), (5, 7),
         (8, 9), (9, 10), (8, 10), (2, 8),
         (3, 11), (4, 11),
         (10, 12)]

START = datetime(2001, 1, 1, 8, 0, 0, tzinfo=timezone.utc)


def address(i):
    return f'p{i:02d}{DOMAIN}'


def _body(i, j, m):
    if 12 in (i, j):
        return ''
    n_sent = 1 + (i + m) % 3 + j % 2
    sentences = [SENTENCES[(i * 3 + j * 5 + m + s * 7) % len(SENTENCES)] for s in range(n_sent)]
    # sender habit: some people write long sign-offs, some write none
    if i % 3 == 0:
        sentences.append(f'best regards from p{i:02d} and the whole team')
    return '. '.join(sentences) + '.\n'


def _n_messages(i, j):
    return 4 + (i * 7 + j * 3) % 5


def make_synthetic_corpus():
    msgs = []
    for a, b in EDGES:
        for i, j in ((a, b), (b, a)):
            for m in range(_n_messages(i, j)):
                ts = START + timedelta(days=(i + j + 3 * m) % 40, hours=i, minutes=j + m)
                msgs.append(Message(f'syn-{i:02d}-{j:02d}-{m:02d}', address(i), (address(j),), ts, _body(i, j, m)))

    # one message to two recipients of the K4 core
    msgs.append(Message('syn-multi-01', address(1), (address(2), address(3)), START + timedelta(days=5),
                        'great news. the deal is signed!'))
    # noise
    msgs.append(Message('syn-noise-outside', 'boss@other.com', (address(1),), START, 'good morning.'))
    msgs.append(Message('syn-noise-self', address(1), (address(1),), START, 'note to self.'))
    for m in range(2):
        msgs.append(Message(f'syn-noise-oneway-{m}', address(12), (address(11),), START + timedelta(days=m), ''))
    # duplicated id, the second copy wins
    msgs.append(Message('syn-01-02-00', address(1), (address(2),), START + timedelta(days=1),
                        'excellent work on the deal.\n'))
    return msgs
