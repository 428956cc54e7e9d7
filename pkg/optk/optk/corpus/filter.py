from collections import Counter

from ..app.logger import get_logger
from .message import Message, PairIndex, normalize_address


def _dedupe(msgs):
    # last occurrence of an id wins
    latest = {}
    n_dup = 0
    for msg in msgs:
        if msg.id in latest:
            n_dup += 1
        latest[msg.id] = msg
    if n_dup:
        get_logger().warning('Corpus', f'{n_dup} duplicate message ids, kept the last occurrence of each')
    return list(latest.values())


def _in_domain(msgs, domain_suffix):
    suffix = domain_suffix.lower()
    kept = []
    for msg in msgs:
        sender = normalize_address(msg.sender)
        if not sender.endswith(suffix):
            continue
        recipients = []
        for rcpt in msg.recipients:
            rcpt = normalize_address(rcpt)
            # self-loops carry no interrelationship
            if rcpt.endswith(suffix) and rcpt != sender and rcpt not in recipients:
                recipients.append(rcpt)
        if recipients:
            kept.append(Message(msg.id, sender, tuple(recipients), msg.timestamp, msg.body))
    return kept


def filter_corpus(msgs, domain_suffix, min_each_direction):
    """Keep the mutual interrelationships of one domain.

    A message counts once toward (sender, r) for every in-domain recipient r.
    The unordered pair {A, B} survives when both A->B and B->A reach
    ``min_each_direction``. Returned messages only list recipients of
    surviving pairs and are sorted by id.
    """
    if min_each_direction < 1:
        raise ValueError(f'min_each_direction must be >= 1, got {min_each_direction}')

    msgs = _in_domain(_dedupe(msgs), domain_suffix)

    counts = Counter((m.sender, r) for m in msgs for r in m.recipients)
    retained = {pair for pair, n in counts.items()
                if n >= min_each_direction and counts.get((pair[1], pair[0]), 0) >= min_each_direction}

    out = []
    for msg in msgs:
        recipients = tuple(r for r in msg.recipients if (msg.sender, r) in retained)
        if recipients:
            out.append(Message(msg.id, msg.sender, recipients, msg.timestamp, msg.body))
    out.sort(key=lambda m: m.id)

    pair_index = PairIndex.from_messages(out)
    if not out:
        get_logger().warning('Corpus', f'no pair of "{domain_suffix}" reaches {min_each_direction} messages in each direction')
    else:
        get_logger().log('Corpus', f'Retained {len(out)} messages, {len(pair_index.individuals())} individuals, '
                                   f'{len(pair_index.unordered_pairs())} interrelationships')
    return out, pair_index
