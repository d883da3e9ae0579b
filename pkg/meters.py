"""
Running meters for verification suites.
"""

import time


class AverageMeter(object):
    """Computes and stores the average and current value"""
    def __init__(self):
        self.reset()

    def reset(self):
        self.val = 0
        self.avg = 0
        self.sum = 0
        self.count = 0

    def update(self, val, n=1):
        self.val = val
        self.sum += val * n
        self.count += n
        self.avg = self.sum / self.count


class TimeMeter(object):
    """Instances checked per second"""
    def __init__(self, init=0):
        self.reset(init)

    def reset(self, init=0):
        self.init = init
        self.start = time.time()
        self.n = 0

    def update(self, val=1):
        self.n += val

    @property
    def avg(self):
        elapsed = self.elapsed_time
        return self.n / elapsed if elapsed > 0 else 0.0

    @property
    def elapsed_time(self):
        return self.init + (time.time() - self.start)


class SuiteMeter(object):
    """Pass counts, records per instance and throughput of one suite run."""
    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.passed = 0
        self.skipped = 0
        self.records = AverageMeter()
        self.rate = TimeMeter()

    def update(self, records):
        if records is None:
            self.skipped += 1
            return
        self.instances += 1
        if all(r.passed for r in records):
            self.passed += 1
        self.records.update(len(records))
        self.rate.update()

    @property
    def failed(self):
        return self.instances - self.passed

    def summary(self):
        return '%s: %d/%d passed, %d skipped, %.1f records/instance, %.2f instances/s, %.1fs' % (
            self.name, self.passed, self.instances, self.skipped, self.records.avg,
            self.rate.avg, self.rate.elapsed_time)
