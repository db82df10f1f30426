'''Heap with exponentially bounded set sizes.

Sets S_1..S_l obey a single size invariant, |S_i| < 3 * 2^i, with no
lower bounds and empty sets allowed anywhere.  When an insert or
decrease_key fills a set to 3 * 2^i, the whole set is pushed down one
level; the push recurses while the receiving level is itself too big
to absorb it.  delete_min refills an empty S_1 by recursively pulling
the smallest elements up, and trims the last set whenever the level
count exceeds 1 + lg n, which keeps it logarithmic.

Pivots use a TOP sentinel when a pull's swap branch empties a set
whose lower bound can no longer be stated from live keys.
'''

import random

from .core import (CostMeter, DeadHandleError, EmptyHeapError,
                   KeyOrderError, LinkedSet, Node)
from .selection import split_by_rank


class _Top:
    '''Pivot sentinel comparing above every key.'''

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is TOP

    def __gt__(self, other):
        return other is not TOP

    def __ge__(self, other):
        return True

    def __repr__(self):
        return 'TOP'


TOP = _Top()


class ExpHeap:
    '''Addressable min-heap over exponentially capped sets.

    API: insert(key) -> handle, delete_min(), decrease_key(handle, key).
    ``selection`` picks deterministic median-of-medians or seeded
    quickselect for the rank selections done by pull.
    '''

    kind = 'exp'

    def __init__(self, selection='det', seed=0):
        if selection not in ('det', 'rand'):
            raise ValueError('selection must be "det" or "rand"')
        self.sets = [LinkedSet()]
        self.pivots = [None]  # pivots[k] bounds sets[k] below; [0] unused
        self.n = 0
        self.meter = CostMeter()
        self.ledger = None
        self._seq = 0
        self._rng = random.Random(seed) if selection == 'rand' else None
        self.last_search_comparisons = 0

    def __len__(self):
        return self.n

    @property
    def num_sets(self):
        return len(self.sets)

    def _find_pos(self, key):
        '''0-based set index with pivot <= key < next pivot.'''
        pivots = self.pivots
        lo = 1
        hi = len(pivots)
        comps = 0
        while lo < hi:
            mid = (lo + hi) >> 1
            comps += 1
            if key < pivots[mid]:
                hi = mid
            else:
                lo = mid + 1
        self.meter.comparisons += comps
        return lo - 1

    # ------------------------------------------------------------------
    # public operations

    def insert(self, user_key):
        '''Add an element; return its handle.'''
        meter = self.meter
        led = self.ledger
        phi0 = self.potential() if led is not None else None
        key = (user_key, self._seq)
        self._seq += 1
        node = Node(key)
        c0 = meter.comparisons
        pos = self._find_pos(key)
        self.last_search_comparisons = meter.comparisons - c0
        s = self.sets[pos]
        s.append(node)
        meter.node_moves += 1
        meter.list_links += 1
        self.n += 1
        if led is not None:
            led.record('insert', before=phi0, after=self.potential())
        if s.size == 3 << (pos + 1):
            self._push_from(pos + 1)
        return node

    def delete_min(self):
        '''Remove and return the smallest user key.'''
        if self.n == 0:
            raise EmptyHeapError('delete_min on empty heap')
        meter = self.meter
        led = self.ledger
        if self.sets[0].size == 0:
            self._pull_into_first()
        phi0 = self.potential() if led is not None else None
        ell = len(self.sets)
        s1 = self.sets[0]
        node = s1.min_node(meter)
        s1.remove(node)
        meter.list_links += 1
        node.alive = False
        self.n -= 1
        if self.n == 0:
            # nothing live: restart from the single-set shape
            self.sets = [LinkedSet()]
            self.pivots = [None]
        elif (1 << (len(self.sets) - 1)) > self.n:
            last = self.sets.pop()
            self.pivots.pop()
            self.sets[-1].concat(last)
            meter.list_links += 1
            assert (1 << (len(self.sets) - 1)) <= self.n
        if led is not None:
            led.record('delete_min', a=ell,
                       before=phi0, after=self.potential())
        return node.key[0]

    def decrease_key(self, node, user_key):
        '''Lower the key of a live handle.'''
        if not node.alive:
            raise DeadHandleError('decrease_key on deleted element')
        if user_key > node.key[0]:
            raise KeyOrderError('decrease_key from %r to larger %r'
                                % (node.key[0], user_key))
        meter = self.meter
        led = self.ledger
        phi0 = self.potential() if led is not None else None
        c0 = meter.comparisons
        pos = self._find_pos(node.key)
        c1 = meter.comparisons
        self.sets[pos].remove(node)
        meter.list_links += 1
        node.key = (user_key, node.key[1])
        dst = self._find_pos(node.key)
        self.last_search_comparisons = max(c1 - c0, meter.comparisons - c1)
        assert dst <= pos
        s = self.sets[dst]
        s.append(node)
        meter.node_moves += 1
        meter.list_links += 1
        if led is not None:
            led.record('decrease_key', before=phi0, after=self.potential())
        if s.size == 3 << (dst + 1):
            self._push_from(dst + 1)

    def potential(self):
        '''(insert, push, pull) potential component sums; pure.'''
        ins = 0
        push = 0
        pull = 0
        prefix = 0
        i = 1
        for s in self.sets:
            size = s.size
            over = size - 5 * (1 << (i - 1))
            if over > 0:
                ins += over
            push += size >> i
            prefix += size
            gap = (1 << (i - 1)) - prefix
            if gap > 0:
                pull += gap
            i += 1
        return (ins, push, pull)

    # ------------------------------------------------------------------
    # restructuring

    def _push_from(self, i):
        '''Push the full set at level i downward; each level either
        absorbs the arriving set, or is displaced and pushed further.'''
        meter = self.meter
        led = self.ledger
        phi0 = self.potential() if led is not None else None
        sets = self.sets
        pivots = self.pivots
        moving = sets[i - 1]
        sets[i - 1] = LinkedSet()
        moving_min = moving.min_node(meter).key
        j = i + 1
        while True:
            assert (1 << (j - 1)) <= moving.size <= (3 << (j - 1))
            if j > len(sets):
                sets.append(moving)
                pivots.append(moving_min)
                break
            target = sets[j - 1]
            if target.size < (1 << j):
                target.concat(moving)
                meter.list_links += 1
                pivots[j - 1] = moving_min
                break
            sets[j - 1] = moving
            pivots[j - 1] = moving_min
            moving = target
            moving_min = moving.min_node(meter).key
            j += 1
        if led is not None:
            led.record('push', a=i, b=j,
                       before=phi0, after=self.potential())

    def _pull_into_first(self):
        led = self.ledger
        if led is not None:
            m = 1
            while self.sets[m - 1].size == 0:
                m += 1
            src = self.sets[m - 1].size
            depth = 0 if src == 1 else min(m - 1, (src - 1).bit_length())
            phi0 = self.potential()
        self._pull(1)
        if led is not None:
            led.record('pull', a=depth, b=m,
                       before=phi0, after=self.potential())

    def _pull(self, i):
        '''Refill empty S_i from below: swap a small next set up whole,
        or select its 2^(i-1) smallest elements.'''
        meter = self.meter
        sets = self.sets
        if sets[i].size == 0:
            self._pull(i + 1)
        nxt = sets[i]
        if nxt.size <= (1 << (i - 1)):
            sets[i - 1], sets[i] = nxt, sets[i - 1]
            meter.list_links += 1
            self.pivots[i] = self.pivots[i + 1] if i + 1 < len(self.pivots) else TOP
        else:
            low, high, boundary = split_by_rank(nxt, 1 << (i - 1),
                                                meter, self._rng)
            sets[i - 1] = low
            sets[i] = high
            self.pivots[i] = boundary

    def __repr__(self):
        return 'ExpHeap(n=%d, sets=%r)' % (self.n,
                                           [s.size for s in self.sets])
