'''Workload traces: generation, text serialization, parsing.

A trace is an ordered list of operations over integer keys:

    i <key>            insert
    d                  delete_min
    k <handle> <key>   decrease_key; <handle> is the 0-based ordinal of
                       the insert that created the element

Lines starting with '#' are comments.  Generated traces are always
valid: decrease_key targets a live handle with a key no larger than
its current one, and delete_min never fires on an empty heap.
'''

import heapq
import random

PATTERNS = ('random', 'sorted', 'reverse', 'dijkstra-like', 'sawtooth',
            'adversarial-dk')


class Trace:
    __slots__ = ('ops',)

    def __init__(self, ops=None):
        self.ops = list(ops) if ops else []

    def __len__(self):
        return len(self.ops)

    def __eq__(self, other):
        return isinstance(other, Trace) and self.ops == other.ops

    def __iter__(self):
        return iter(self.ops)

    def serialize(self):
        lines = []
        for op in self.ops:
            if op[0] == 'i':
                lines.append('i %d' % op[1])
            elif op[0] == 'd':
                lines.append('d')
            else:
                lines.append('k %d %d' % (op[1], op[2]))
        lines.append('')
        return '\n'.join(lines)

    @classmethod
    def parse(cls, text):
        ops = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            try:
                if parts[0] == 'i' and len(parts) == 2:
                    ops.append(('i', int(parts[1])))
                elif parts[0] == 'd' and len(parts) == 1:
                    ops.append(('d',))
                elif parts[0] == 'k' and len(parts) == 3:
                    ops.append(('k', int(parts[1]), int(parts[2])))
                else:
                    raise ValueError
            except ValueError:
                raise ValueError('bad trace line %d: %r' % (lineno, line))
        return cls(ops)

    def save(self, path):
        with open(path, 'w') as fh:
            fh.write(self.serialize())

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.parse(fh.read())

    def __repr__(self):
        return 'Trace(%d ops)' % len(self.ops)


class _Shadow:
    '''Minimal heap model the generator consults so every emitted
    operation is valid: tracks live handles, their current keys, and
    the current minimum/maximum.'''

    def __init__(self):
        self.cur = {}           # hid -> current user key
        self._min = []          # (key, hid)
        self._max = []          # (-key, hid)
        self.live_list = []     # hids, lazily compacted

    def __len__(self):
        return len(self.cur)

    def insert(self, hid, key):
        self.cur[hid] = key
        heapq.heappush(self._min, (key, hid))
        heapq.heappush(self._max, (-key, hid))
        self.live_list.append(hid)

    def decrease(self, hid, key):
        self.cur[hid] = key
        heapq.heappush(self._min, (key, hid))
        heapq.heappush(self._max, (-key, hid))

    def _valid_min(self):
        while True:
            key, hid = self._min[0]
            if self.cur.get(hid) == key:
                return key, hid
            heapq.heappop(self._min)

    def delete_min(self):
        key, hid = self._valid_min()
        heapq.heappop(self._min)
        del self.cur[hid]
        return hid

    def min_key(self):
        return self._valid_min()[0]

    def max_live(self):
        while True:
            negkey, hid = self._max[0]
            if self.cur.get(hid) == -negkey:
                return hid
            heapq.heappop(self._max)

    def random_live(self, rng):
        lst = self.live_list
        while True:
            i = rng.randrange(len(lst))
            hid = lst[i]
            if hid in self.cur:
                return hid
            lst[i] = lst[-1]
            lst.pop()

    def recent_live(self, rng, reach=16):
        '''A live handle biased toward recently inserted ones.'''
        lst = self.live_list
        for back in range(1, min(len(lst), reach) + 1):
            hid = lst[-back]
            if hid in self.cur and rng.random() < 0.5:
                return hid
        return self.random_live(rng)


def gen(pattern, ops, seed):
    '''Deterministic trace for (pattern, ops, seed).'''
    if pattern not in PATTERNS:
        raise ValueError('unknown pattern %r (expected one of %s)'
                         % (pattern, ', '.join(PATTERNS)))
    rng = random.Random((pattern, ops, seed).__repr__())
    out = []
    shadow = _Shadow()
    hid = 0

    def emit_insert(key):
        nonlocal hid
        out.append(('i', key))
        shadow.insert(hid, key)
        hid += 1

    def emit_delete():
        out.append(('d',))
        shadow.delete_min()

    def emit_decrease(h, key):
        out.append(('k', h, key))
        shadow.decrease(h, key)

    if pattern == 'sorted':
        for k in range(ops):
            emit_insert(k)
    elif pattern == 'reverse':
        for k in range(ops, 0, -1):
            emit_insert(k)
    elif pattern == 'random':
        while len(out) < ops:
            r = rng.random()
            if not shadow or r < 0.5:
                emit_insert(rng.randrange(1 << 30))
            elif r < 0.8:
                emit_delete()
            else:
                h = shadow.random_live(rng)
                emit_decrease(h, shadow.cur[h] - rng.randrange(1 << 16))
    elif pattern == 'dijkstra-like':
        clock = 0
        while len(out) < ops:
            r = rng.random()
            if not shadow or r < 0.35:
                emit_insert(clock + rng.randrange(1 << 14))
                clock += rng.randrange(4)
            elif r < 0.80:
                h = shadow.recent_live(rng)
                cut = rng.randrange(1, 1 << 10)
                emit_decrease(h, shadow.cur[h] - cut)
            else:
                emit_delete()
    elif pattern == 'sawtooth':
        while len(out) < ops:
            burst = rng.randrange(16, 257)
            for _ in range(min(burst, ops - len(out))):
                emit_insert(rng.randrange(1 << 30))
            drain = rng.randrange(burst // 2, burst + 1)
            while drain and shadow and len(out) < ops:
                emit_delete()
                drain -= 1
    else:  # adversarial-dk: keep decreasing the maximum below the minimum
        warm = min(max(ops // 8, 16), 4096)
        for _ in range(min(warm, ops)):
            emit_insert(rng.randrange(1 << 30))
        while len(out) < ops:
            r = rng.random()
            if not shadow or r < 0.10:
                emit_insert(rng.randrange(1 << 30))
            elif r < 0.25 and len(shadow) > 1:
                emit_delete()
            else:
                h = shadow.max_live()
                target = shadow.min_key() - 1 - rng.randrange(4)
                if shadow.cur[h] < target:
                    target = shadow.cur[h]
                emit_decrease(h, target)
    return Trace(out)
