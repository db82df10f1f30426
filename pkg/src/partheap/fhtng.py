'''Slot-indexed heap with Fibonacci size bands.

Sets occupy numbered slots starting at 3.  A set present in slot i > 3
keeps its size strictly between F_i and F_{i+3} while the structure is
at rest; slot 3 has no lower bound.  Two structural rules bound the
slot layout: never three nonempty slots in a row, and never nine empty
slots in a row below the last nonempty slot.  Together the rules keep
the first nonempty slot at index <= 11, so delete_min scans at most
F_14 = 377 elements, and keep the number of pivots logarithmic for the
binary searches done by insert and decrease_key.

Six restoring operations repair violations, each with a constant or
Fibonacci nominal cost that the potential tracker checks against the
three-part potential (nonempty / size / up):

  overflow_down   full set, empty slot below: slide down, O(1)
  overflow_thru   full set, occupied slot below: concatenate, push the
                  largest F_{i+3} through to the next empty slot
  underflow_up    underfull set, empty slot above: slide up, O(1)
  underflow_thru  underfull set, occupied slot above: concatenate, pull
                  the smallest F_i back out to the empty slot above
  merge_down      three-in-a-row: bottom two concatenate into the empty
                  slot below the run, O(1)
  split_up        nine-empties-in-a-row: the set below the gap splits
                  golden-ratio-proportionally into the two slots above

An underfull slot 4 with slot 3 occupied has no empty slot above to
refill, so its set is folded into slot 3 instead (slot 3 is exempt
from the lower bound); any resulting oversize of slot 3 is repaired by
the regular overflow path in the same pass.
'''

import random
from bisect import bisect_left

from .core import (CostMeter, DeadHandleError, EmptyHeapError,
                   KeyOrderError, LinkedSet, Node, pivot_search)
from .selection import split_by_rank


class FibTable:
    '''Precomputed Fibonacci numbers; indices <= 0 give 0.'''

    __slots__ = ('_vals',)

    def __init__(self, length=96):
        vals = [0, 1, 1]
        while len(vals) < length:
            vals.append(vals[-1] + vals[-2])
        self._vals = vals

    def __getitem__(self, i):
        if i <= 0:
            return 0
        return self._vals[i]

    def __len__(self):
        return len(self._vals)


FIB = FibTable()  # F_95 > 3.1e19 > 6 * 2^60, beyond any feasible n

_FIRST_SLOT = 3


def proportional_split_sizes(i, size):
    '''Sizes (a, b) for splitting a slot-i set of the given size into
    slots i-2 and i-1: with size = F_{i+j} + r for the lowest fitting
    band j, b = F_{i+j-1} + min(r, F_{i+j-2}) and a is the rest, which
    lands both parts inside their target bands.'''
    fib = FIB
    if size <= fib[i + 1]:
        j = 0
    elif size <= fib[i + 2]:
        j = 1
    else:
        j = 2
    assert fib[i + j] <= size <= fib[i + j + 1]
    rem = size - fib[i + j]
    b = fib[i + j - 1] + min(rem, fib[i + j - 2])
    a = size - b
    assert fib[i + j - 2] <= a <= fib[i + j - 1]
    assert fib[i + j - 1] <= b <= fib[i + j]
    return a, b


class FHTNGHeap:
    '''Addressable min-heap over Fibonacci-banded slots.

    API: insert(key) -> handle, delete_min(), decrease_key(handle, key),
    with the usual error reporting for empty heaps, dead handles and
    key increases.  ``selection`` chooses the rank-selection strategy
    used by the -thru and split operations.
    '''

    kind = 'fhtng'

    def __init__(self, selection='det', seed=0):
        if selection not in ('det', 'rand'):
            raise ValueError('selection must be "det" or "rand"')
        self.slot_sets = [None] * (_FIRST_SLOT + 1)
        self.slot_pivots = [None] * (_FIRST_SLOT + 1)
        self._ne = []        # sorted indices of nonempty slots
        self._ne_pivs = []   # their pivots, same order
        self.n = 0
        self.meter = CostMeter()
        self.ledger = None
        self._seq = 0
        self._rng = random.Random(seed) if selection == 'rand' else None
        self.last_search_comparisons = 0

    def __len__(self):
        return self.n

    # ------------------------------------------------------------------
    # slot bookkeeping

    def _grow(self, i):
        while len(self.slot_sets) <= i:
            self.slot_sets.append(None)
            self.slot_pivots.append(None)

    def _set_slot(self, i, linked_set, pivot):
        self._grow(i)
        assert self.slot_sets[i] is None
        self.slot_sets[i] = linked_set
        self.slot_pivots[i] = pivot
        pos = bisect_left(self._ne, i)
        self._ne.insert(pos, i)
        self._ne_pivs.insert(pos, pivot)

    def _clear_slot(self, i):
        self.slot_sets[i] = None
        self.slot_pivots[i] = None
        pos = bisect_left(self._ne, i)
        assert self._ne[pos] == i
        del self._ne[pos]
        del self._ne_pivs[pos]

    def _set_pivot(self, i, pivot):
        self.slot_pivots[i] = pivot
        pos = bisect_left(self._ne, i)
        assert self._ne[pos] == i
        self._ne_pivs[pos] = pivot

    def _place_slot(self, key):
        '''Destination slot for an arriving key: the rightmost slot
        whose pivot is <= key, or slot 3 when the key is below every
        pivot (creating or re-bounding slot 3 as needed).'''
        pos = pivot_search(self._ne_pivs, key, self.meter)
        if pos > 1:
            return self._ne[pos - 2]
        if self.slot_sets[_FIRST_SLOT] is None:
            self._set_slot(_FIRST_SLOT, LinkedSet(), key)
        else:
            self.meter.comparisons += 1
            if key < self.slot_pivots[_FIRST_SLOT]:
                # slot 3 is the first set; its stored pivot is only a
                # lower bound, kept tight so the sandwich audit is exact
                assert self._ne[0] == _FIRST_SLOT
                self.slot_pivots[_FIRST_SLOT] = key
                self._ne_pivs[0] = key
        return _FIRST_SLOT

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
        slot = self._place_slot(key)
        self.last_search_comparisons = meter.comparisons - c0
        self.slot_sets[slot].append(node)
        meter.node_moves += 1
        meter.list_links += 1
        self.n += 1
        if led is not None:
            led.record('insert', before=phi0, after=self.potential())
        self._restore()
        return node

    def delete_min(self):
        '''Remove and return the smallest user key.'''
        if self.n == 0:
            raise EmptyHeapError('delete_min on empty heap')
        meter = self.meter
        led = self.ledger
        phi0 = self.potential() if led is not None else None
        nonempty_before = len(self._ne)
        j = self._ne[0]
        s = self.slot_sets[j]
        node = s.min_node(meter)
        s.remove(node)
        meter.list_links += 1
        node.alive = False
        self.n -= 1
        if s.size == 0:
            self._clear_slot(j)
        if led is not None:
            led.record('delete_min', a=nonempty_before,
                       before=phi0, after=self.potential())
        self._restore()
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
        pos = pivot_search(self._ne_pivs, node.key, meter)
        c1 = meter.comparisons
        assert pos > 1  # a live key is never below the first pivot
        src = self._ne[pos - 2]
        s = self.slot_sets[src]
        s.remove(node)
        meter.list_links += 1
        if s.size == 0:
            self._clear_slot(src)
        node.key = (user_key, node.key[1])
        phi1 = self.potential() if led is not None else None
        self._restore()
        phi2 = self.potential() if led is not None else None
        c2 = meter.comparisons
        dst = self._place_slot(node.key)
        self.last_search_comparisons = max(c1 - c0, meter.comparisons - c2)
        self.slot_sets[dst].append(node)
        meter.node_moves += 1
        meter.list_links += 1
        if led is not None:
            # the two direct mutations, summed componentwise so the
            # restoring sub-operations in between cancel out
            phi3 = self.potential()
            before = tuple(a + c for a, c in zip(phi0, phi2))
            after = tuple(b + d for b, d in zip(phi1, phi3))
            led.record('decrease_key', before=before, after=after)
        self._restore()

    def potential(self):
        '''(nonempty, size, up) potential sums; pure observation.'''
        fib = FIB
        sets = self.slot_sets
        pn = 0
        ps = 0
        pu = 0
        prefix = 0
        for i in self._ne:
            size = sets[i].size
            pn += 1
            if size >= fib[i]:
                if size < fib[i + 1]:
                    ps += fib[i + 1] - size
                elif size > fib[i + 2]:
                    ps += size - fib[i + 2]
            d = fib[i - 3] - prefix
            if d > 0:
                pu += d
            prefix += size
        return (pn, ps, pu)

    # ------------------------------------------------------------------
    # invariant restoration

    def _restore(self):
        guard = 0
        limit = 4 * (len(self.slot_sets) + 4)
        while True:
            violation = self._find_violation()
            if violation is None:
                return
            kind, i = violation
            if kind == 'over':
                self._overflow(i)
            elif kind == 'under':
                self._underflow(i)
            elif kind == 'merge':
                self._merge_down(i)
            else:
                self._split_up(i)
            guard += 1
            limit = max(limit, 4 * (len(self.slot_sets) + 4))
            if guard > limit:
                raise AssertionError(
                    'restoration did not converge in %d steps' % guard)

    def _find_violation(self):
        '''Lowest-index violation: size bounds first at each slot, then
        a nine-empty gap (reported at the nonempty slot below it), then
        a three-nonempty run (reported at the run's last slot).'''
        fib = FIB
        sets = self.slot_sets
        ne = self._ne
        prev = _FIRST_SLOT - 1
        run = 0
        for pos, i in enumerate(ne):
            gap = i - prev - 1
            size = sets[i].size
            if size >= fib[i + 3]:
                return ('over', i)
            if i > _FIRST_SLOT and size <= fib[i]:
                return ('under', i)
            if gap >= 9:
                return ('split', i)
            run = run + 1 if gap == 0 else 1
            if run >= 3:
                end = i
                k = pos + 1
                while k < len(ne) and ne[k] == end + 1:
                    end = ne[k]
                    k += 1
                return ('merge', end)
            prev = i
        return None

    def _overflow(self, i):
        '''Full set at slot i: slide into an empty slot below, or pass
        the largest F_{i+3} elements through the occupied one.'''
        meter = self.meter
        led = self.ledger
        fib = FIB
        self._grow(i + 2)
        s = self.slot_sets[i]
        if self.slot_sets[i + 1] is None:
            phi0 = self.potential() if led is not None else None
            pivot = self.slot_pivots[i]
            self._clear_slot(i)
            self._set_slot(i + 1, s, pivot)
            meter.list_links += 1
            if led is not None:
                led.record('overflow_down', a=i, nominal=1,
                           before=phi0, after=self.potential())
            return
        assert self.slot_sets[i + 2] is None
        assert s.size >= fib[i + 3]
        phi0 = self.potential() if led is not None else None
        target = self.slot_sets[i + 1]
        keep = target.size
        self._clear_slot(i)
        target.concat(s)
        meter.list_links += 1
        low, high, boundary = split_by_rank(target, keep, meter, self._rng)
        self.slot_sets[i + 1] = low
        self._set_pivot(i + 1, low.min_node(meter).key)
        self._set_slot(i + 2, high, boundary)
        if led is not None:
            led.record('overflow_thru', a=i, nominal=fib[i - 4],
                       before=phi0, after=self.potential())

    def _underflow(self, i):
        '''Underfull set at slot i > 3: slide into an empty slot above,
        pull the smallest F_i back out through an occupied one, or fold
        into slot 3 when no slot above exists.'''
        meter = self.meter
        led = self.ledger
        fib = FIB
        s = self.slot_sets[i]
        assert i > _FIRST_SLOT and s.size <= fib[i]
        if self.slot_sets[i - 1] is None:
            phi0 = self.potential() if led is not None else None
            pivot = self.slot_pivots[i]
            self._clear_slot(i)
            self._set_slot(i - 1, s, pivot)
            meter.list_links += 1
            if led is not None:
                led.record('underflow_up', a=i, nominal=1,
                           before=phi0, after=self.potential())
            return
        if i - 2 >= _FIRST_SLOT:
            assert self.slot_sets[i - 2] is None
            phi0 = self.potential() if led is not None else None
            upper = self.slot_sets[i - 1]
            keep = upper.size
            take = s.size
            upper.concat(s)
            meter.list_links += 1
            self._clear_slot(i)
            low, high, boundary = split_by_rank(upper, take, meter, self._rng)
            assert high.size == keep
            self.slot_sets[i - 1] = high
            self._set_pivot(i - 1, boundary)
            self._set_slot(i - 2, low, low.min_node(meter).key)
            if led is not None:
                led.record('underflow_thru', a=i, nominal=fib[i - 6],
                           before=phi0, after=self.potential())
            return
        # i == 4 and slot 3 occupied: nowhere above to refill
        phi0 = self.potential() if led is not None else None
        s3 = self.slot_sets[_FIRST_SLOT]
        s3.concat(s)
        meter.list_links += 1
        self._clear_slot(i)
        if led is not None:
            led.record('bottom_merge', a=i, nominal=1,
                       before=phi0, after=self.potential())

    def _merge_down(self, i):
        '''Three nonempty slots end at i: concatenate slots i-1 and i
        into the empty slot i+1, keeping the lower slot's pivot.'''
        meter = self.meter
        led = self.ledger
        phi0 = self.potential() if led is not None else None
        self._grow(i + 1)
        assert self.slot_sets[i + 1] is None
        merged = self.slot_sets[i - 1]
        pivot = self.slot_pivots[i - 1]
        tail = self.slot_sets[i]
        merged.concat(tail)
        meter.list_links += 2
        self._clear_slot(i - 1)
        self._clear_slot(i)
        self._set_slot(i + 1, merged, pivot)
        if led is not None:
            led.record('merge_down', a=i, nominal=1,
                       before=phi0, after=self.potential())

    def _split_up(self, i):
        '''Nine empty slots sit above nonempty slot i: split its set
        proportionally into slots i-2 and i-1.'''
        meter = self.meter
        led = self.ledger
        fib = FIB
        assert i >= 12  # nine empties above slot i force this
        phi0 = self.potential() if led is not None else None
        s = self.slot_sets[i]
        a, b = proportional_split_sizes(i, s.size)
        self._clear_slot(i)
        low, high, boundary = split_by_rank(s, a, meter, self._rng)
        self._set_slot(i - 2, low, low.min_node(meter).key)
        self._set_slot(i - 1, high, boundary)
        if led is not None:
            led.record('split_up', a=i, nominal=fib[i - 6],
                       before=phi0, after=self.potential())

    def __repr__(self):
        shape = ', '.join('%d:%d' % (i, self.slot_sets[i].size)
                          for i in self._ne)
        return 'FHTNGHeap(n=%d, slots={%s})' % (self.n, shape)
