class Summary():
    """Named counters collected while the stages run (messages kept, pairs,
    undefined cells, triangles, ...). Rendered into the final log line."""

    def __init__(self):
        self.items = []
        self.counters = {}

    def register(self, keys):
        for k in keys:
            if k not in self.counters:
                self.items.append(k)
                self.counters[k] = 0

    def update(self, stats):
        for k, v in stats.items():
            if k not in self.counters:
                self.register([k])
            self.counters[k] = v

    def add(self, k, v=1):
        if k not in self.counters:
            self.register([k])
        self.counters[k] += v

    def get_item(self, k):
        return self.counters[k]

    def as_dict(self):
        return {k: self.counters[k] for k in self.items}

    def get(self):
        return '\t'.join(f'{k}: {self._fmt(self.counters[k])}' for k in self.items)

    @staticmethod
    def _fmt(v):
        return f'{v:.4f}' if isinstance(v, float) else str(v)
