"""
Shared helpers for matreg: error base class, subset bitmasks, canonical
ordering, logging and timing.
"""
from __future__ import print_function

import errno
import hashlib
import math
import os
import re
from dataclasses import dataclass, field

import numpy as np

DEFAULT_BUDGET = 300000
BUDGET_ENV = 'MATREG_BUDGET'


class MatregError(Exception):
    """Root of every error raised by matreg modules."""
    pass


def assert_eq(real, expected):
    assert real == expected, '%s (true) vs %s (expected)' % (real, expected)


# --------------------subsets as bitmasks---------------------------
# Element i of the ground set [n] is bit i-1.

def to_mask(subset):
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count('1')


def full_mask(n):
    return (1 << n) - 1


def lowest_element(mask):
    """1-based label of the lowest set bit."""
    return (mask & -mask).bit_length()


def canonical_subset(subset):
    return tuple(sorted(set(int(i) for i in subset)))


def canonical_family(family):
    """Dedupe and sort a family of subsets lexicographically as sorted tuples."""
    return tuple(sorted(set(canonical_subset(s) for s in family)))


def maximal_members(family):
    """Members not strictly contained in another member (antichain reduction)."""
    masks = sorted(set(to_mask(s) for s in family), key=popcount, reverse=True)
    kept = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return canonical_family(from_mask(m) for m in kept)


def minimal_members(family):
    masks = sorted(set(to_mask(s) for s in family), key=popcount)
    kept = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return canonical_family(from_mask(m) for m in kept)


def bounded_vectors(length, total):
    """Nonnegative integer vectors of the given length summing to `total`,
    in decreasing lexicographic order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in bounded_vectors(length - 1, total - head):
            yield (head,) + tail


def ceil_div(a, b):
    return -(-a // b)


def format_subset(subset):
    return '{' + ' '.join(str(i) for i in subset) + '}'


def format_family(family):
    return ' '.join(format_subset(s) for s in family)


def canonical_hash(text):
    return hashlib.sha1(text.encode('utf-8')).hexdigest()[:12]


def parse_range(text):
    """'1..3' -> [1, 2, 3]; '2' -> [2]; '1,3' -> [1, 3]."""
    text = text.strip()
    m = re.match(r'^(-?\d+)\.\.(-?\d+)$', text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError('empty range %s' % text)
        return list(range(lo, hi + 1))
    return [int(v) for v in text.split(',') if v.strip()]


def default_budget():
    value = os.environ.get(BUDGET_ENV)
    if value is None or not value.strip():
        return DEFAULT_BUDGET
    return int(value)


def is_prime(p):
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


# --------------------verification records---------------------------
@dataclass
class VerificationRecord:
    """One checked claim on one instance. `values` keeps the numbers the
    claim was decided on so a report line can be re-checked by hand."""
    claim: str
    instance: str
    passed: bool
    values: dict = field(default_factory=dict)
    equality: bool = False
    note: str = ''

    def expected(self):
        return self.values.get('expected', '')

    def observed(self):
        return self.values.get('observed', '')


# --------------------files and logging---------------------------
def create_dir(path):
    if not os.path.exists(path):
        try:
            os.makedirs(path)
        except OSError as exc:
            if exc.errno != errno.EEXIST:
                raise


def load_folder(folder, suffix):
    files = []
    for f in sorted(os.listdir(folder)):
        if f.endswith(suffix):
            files.append(os.path.join(folder, f))
    return files


class Logger(object):
    def __init__(self, output_name=None, quiet=False):
        self.log_file = None
        self.quiet = quiet
        if output_name:
            dirname = os.path.dirname(output_name)
            if dirname:
                create_dir(dirname)
            self.log_file = open(output_name, 'w')
        self.infos = {}
        self.lines = []

    def append(self, key, val):
        vals = self.infos.setdefault(key, [])
        vals.append(val)

    def log(self, extra_msg=''):
        msgs = [extra_msg] if extra_msg else []
        for key, vals in sorted(self.infos.items()):
            msgs.append('%s %.6f' % (key, np.mean(vals)))
        msg = '\n'.join(msgs)
        self.infos = {}
        if msg:
            self.write(msg)
        return msg

    def write(self, msg):
        self.lines.append(msg)
        if self.log_file is not None:
            self.log_file.write(msg + '\n')
            self.log_file.flush()
        if not self.quiet:
            print(msg)

    def close(self):
        if self.log_file is not None:
            self.log_file.close()
            self.log_file = None


def as_minutes(seconds):
    minutes = math.floor(seconds / 60)
    seconds -= minutes * 60
    return '%dm %ds' % (minutes, seconds)

