import time


class Timer():
    def __init__(self):
        self._start = time.perf_counter()
        self._checkpoints = {}
        self.elapsed = {}

    def set_point(self, pid='default'):
        self._checkpoints[pid] = time.perf_counter()

    def get_point(self, pid='default'):
        return time.perf_counter() - self._checkpoints[pid]

    def stop_point(self, pid='default'):
        # keeps the last duration per checkpoint for the run summary
        self.elapsed[pid] = self.get_point(pid)
        del self._checkpoints[pid]
        return self.elapsed[pid]

    def total(self):
        return time.perf_counter() - self._start

    def report(self):
        return ', '.join(f'{pid} {sec:.2f}s' for pid, sec in self.elapsed.items())
