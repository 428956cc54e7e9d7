from dataclasses import dataclass, field
from datetime import datetime, timezone
from email.utils import parseaddr

TIMESTAMP_FORMAT = '%Y-%m-%dT%H:%M:%SZ'


def normalize_address(raw):
    """Lowercase, trim and strip the display name: 'Jeff <J.Doe@x.com>' -> 'j.doe@x.com'."""
    if raw is None:
        return ''
    _, addr = parseaddr(str(raw).strip())
    return addr.strip().lower()


def parse_timestamp(value):
    # accepts the canonical 'YYYY-MM-DDThh:mm:ssZ' and any ISO-8601 offset form
    if isinstance(value, datetime):
        ts = value
    else:
        ts = datetime.fromisoformat(str(value).strip().replace('Z', '+00:00'))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc).replace(microsecond=0)


def format_timestamp(ts):
    return ts.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)


@dataclass(frozen=True)
class Message:
    id: str
    sender: str
    recipients: tuple
    timestamp: datetime
    body: str = ''

    def __post_init__(self):
        if not self.sender:
            raise ValueError(f'message {self.id} has an empty sender')
        object.__setattr__(self, 'recipients', tuple(self.recipients))
        object.__setattr__(self, 'timestamp', parse_timestamp(self.timestamp))
        object.__setattr__(self, 'body', self.body or '')

    def to_record(self):
        return {'id': self.id,
                'from': self.sender,
                'to': list(self.recipients),
                'timestamp': format_timestamp(self.timestamp),
                'body': self.body}


@dataclass
class PairStats:
    count: int
    first: datetime
    last: datetime
    message_ids: list = field(default_factory=list)

    @property
    def span_days(self):
        return (self.last - self.first).total_seconds() / 86400.0


class PairIndex():
    """Per ordered pair (sender, recipient): count N, first/last timestamp, message ids."""

    def __init__(self, stats=None):
        self._stats = dict(stats or {})

    @classmethod
    def from_messages(cls, msgs):
        # one contribution per (message, recipient)
        stats = {}
        for msg in msgs:
            for rcpt in msg.recipients:
                key = (msg.sender, rcpt)
                entry = stats.get(key)
                if entry is None:
                    stats[key] = PairStats(1, msg.timestamp, msg.timestamp, [msg.id])
                else:
                    entry.count += 1
                    entry.first = min(entry.first, msg.timestamp)
                    entry.last = max(entry.last, msg.timestamp)
                    entry.message_ids.append(msg.id)
        return cls(stats)

    def __getitem__(self, pair):
        return self._stats[pair]

    def __contains__(self, pair):
        return pair in self._stats

    def __len__(self):
        return len(self._stats)

    def __iter__(self):
        return iter(self.pairs())

    def pairs(self):
        return sorted(self._stats)

    def items(self):
        return [(pair, self._stats[pair]) for pair in self.pairs()]

    def mirror(self, pair):
        return self._stats.get((pair[1], pair[0]))

    def unordered_pairs(self):
        return sorted({tuple(sorted(pair)) for pair in self._stats})

    def individuals(self):
        return sorted({v for pair in self._stats for v in pair})

    def total_count(self):
        return sum(s.count for s in self._stats.values())
