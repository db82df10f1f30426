'''Lazy-partition heap.

Elements live in unordered sets S_1..S_l separated by pivots; only
delete_min restructures.  It removes the minimum from S_1, splits what
remains of S_1 at the larger median, then runs a pivot-forgetting pass
that concatenates any adjacent pair of sets holding fewer elements
together than the number of elements before them.  That single rule
keeps l <= 2*lg(n) + 1, so the binary search done by insert and
decrease_key costs O(lg lg n) comparisons.

The scaling parameter ``beta`` only affects the reported potential
(sum of beta * max(0, |S_j| - elements_before_j)); it never changes
control flow.
'''

import random

from .core import (CostMeter, DeadHandleError, EmptyHeapError,
                   KeyOrderError, LinkedSet, Node, PivotIndex)
from .selection import split_by_rank


class LPHeap:
    '''Addressable min-heap with O(lg lg n) insert/decrease_key and
    O(lg n) delete_min, all amortized.

    ``insert`` returns a stable handle accepted by ``decrease_key``,
    ``increase_key`` and ``delete``.  ``selection`` picks how
    delete_min partitions: 'det' uses deterministic median-of-medians
    at the larger-median rank, 'rand' uses a single seeded random
    partition round.
    '''

    kind = 'lp'

    def __init__(self, beta=4, selection='det', seed=0):
        if selection not in ('det', 'rand'):
            raise ValueError('selection must be "det" or "rand"')
        self.sets = []
        self.index = PivotIndex()
        self.n = 0
        self.beta = beta
        self.cached_min = None
        self.meter = CostMeter()
        self.ledger = None
        self._seq = 0
        self._randomized = (selection == 'rand')
        self._rng = random.Random(seed)
        self._fresh_partition = True
        self.last_search_comparisons = 0
        self.last_delete_min_touches = 0

    def __len__(self):
        return self.n

    @property
    def num_sets(self):
        return len(self.sets)

    # ------------------------------------------------------------------
    # public operations

    def insert(self, user_key):
        '''Add an element; return its handle.'''
        meter = self.meter
        led = self.ledger
        phi0 = self.potential_phi() if led is not None else 0
        key = (user_key, self._seq)
        self._seq += 1
        node = Node(key)
        if not self.sets:
            self.sets.append(LinkedSet())
        c0 = meter.comparisons
        pos = self.index.search(key, meter)
        self.last_search_comparisons = meter.comparisons - c0
        self.sets[pos - 1].append(node)
        meter.node_moves += 1
        meter.list_links += 1
        self.n += 1
        if self.cached_min is None:
            self.cached_min = node
        else:
            meter.comparisons += 1
            if key < self.cached_min.key:
                self.cached_min = node
        self._fresh_partition = False
        if led is not None:
            led.record('insert', before=(phi0,), after=(self.potential_phi(),))
        return node

    def find_min(self):
        '''Smallest user key, in O(1).'''
        if self.n == 0:
            raise EmptyHeapError('find_min on empty heap')
        return self.cached_min.key[0]

    def delete_min(self):
        '''Remove and return the smallest user key.'''
        if self.n == 0:
            raise EmptyHeapError('delete_min on empty heap')
        meter = self.meter
        led = self.ledger
        phi0 = self.potential_phi() if led is not None else 0
        s1 = self.sets[0]
        s1_before = s1.size
        ell_before = len(self.sets)
        node = s1.min_node(meter)
        touches = s1_before
        s1.remove(node)
        meter.list_links += 1
        node.alive = False
        self.n -= 1
        emptied = s1.size == 0
        if s1.size >= 2:
            touches += self._split_first()
        self._forget_pivots()
        if emptied and self.sets and self.sets[0].size >= 2:
            # S_1 vanished and another set moved to the front.  Partition
            # it as well: the potential it releases pays for the minimum
            # rescan below, which would otherwise be uncovered.  A random
            # split can leave its high side small enough to trip the
            # concatenation rule, so sweep once more.
            touches += self._split_first()
            self._forget_pivots()
        self.last_delete_min_touches = touches
        if self.n == 0:
            self.cached_min = None
        else:
            self.cached_min = self.sets[0].min_node(meter)
        self._fresh_partition = True
        if led is not None:
            led.record('delete_min', a=s1_before, b=ell_before,
                       before=(phi0,), after=(self.potential_phi(),))
        return node.key[0]

    def decrease_key(self, node, user_key):
        '''Lower the key of a live handle (moves it toward the front).'''
        if not node.alive:
            raise DeadHandleError('decrease_key on deleted element')
        if user_key > node.key[0]:
            raise KeyOrderError('decrease_key from %r to larger %r'
                                % (node.key[0], user_key))
        meter = self.meter
        led = self.ledger
        phi0 = self.potential_phi() if led is not None else 0
        c0 = meter.comparisons
        pos = self.index.search(node.key, meter)
        c1 = meter.comparisons
        src = self.sets[pos - 1]
        src.remove(node)
        meter.list_links += 1
        node.key = (user_key, node.key[1])
        dst_pos = self.index.search(node.key, meter)
        self.last_search_comparisons = max(c1 - c0, meter.comparisons - c1)
        assert dst_pos <= pos
        self.sets[dst_pos - 1].append(node)
        meter.node_moves += 1
        meter.list_links += 1
        meter.comparisons += 1
        if node.key < self.cached_min.key:
            self.cached_min = node
        self._fresh_partition = False
        if led is not None:
            led.record('decrease_key', before=(phi0,),
                       after=(self.potential_phi(),))

    def delete(self, node):
        '''Remove an arbitrary live element by handle.'''
        if not node.alive:
            raise DeadHandleError('delete on deleted element')
        meter = self.meter
        pos = self.index.search(node.key, meter)
        self.sets[pos - 1].remove(node)
        meter.list_links += 1
        node.alive = False
        self.n -= 1
        was_min = node is self.cached_min
        self._forget_pivots()
        if self.n == 0:
            self.cached_min = None
        elif was_min:
            self.cached_min = self.sets[0].min_node(meter)

    def increase_key(self, node, user_key):
        '''Raise the key of a live handle (delete + re-insert, same
        tie-break counter).'''
        if not node.alive:
            raise DeadHandleError('increase_key on deleted element')
        if user_key < node.key[0]:
            raise KeyOrderError('increase_key from %r to smaller %r'
                                % (node.key[0], user_key))
        meter = self.meter
        pos = self.index.search(node.key, meter)
        self.sets[pos - 1].remove(node)
        meter.list_links += 1
        was_min = node is self.cached_min
        node.key = (user_key, node.key[1])
        self._forget_pivots()
        if not self.sets:
            self.sets.append(LinkedSet())
        dst_pos = self.index.search(node.key, meter)
        self.sets[dst_pos - 1].append(node)
        meter.node_moves += 1
        meter.list_links += 1
        if was_min:
            self.cached_min = self.sets[0].min_node(meter)

    @classmethod
    def build(cls, items, beta=4, selection='det', seed=0):
        '''Heap over ``items`` in one shot: everything lands in S_1.'''
        heap = cls(beta=beta, selection=selection, seed=seed)
        s = LinkedSet()
        for user_key in items:
            node = Node((user_key, heap._seq))
            heap._seq += 1
            s.append(node)
        if s.size:
            heap.sets = [s]
            heap.n = s.size
            heap.meter.node_moves += s.size
            heap.meter.list_links += s.size
            heap.cached_min = s.min_node(heap.meter)
        return heap

    def potential_phi(self):
        '''Sum of beta * max(0, |S_j| - elements_before_j); pure.'''
        beta = self.beta
        total = 0
        prefix = 0
        for s in self.sets:
            over = s.size - prefix
            if over > 0:
                total += beta * over
            prefix += s.size
        return total

    # ------------------------------------------------------------------
    # restructuring

    def _split_first(self):
        '''Partition the first set; its r smallest stay in front and
        the boundary key becomes a new pivot.  Returns the number of
        elements the partition pass touched.'''
        s = self.sets[0]
        size = s.size
        if self._randomized:
            low, high, pivot = self._random_split(s)
        else:
            r = (size + 1) // 2  # larger median: low side never smaller
            low, high, pivot = split_by_rank(s, r, self.meter)
        self.sets[0:1] = [low, high]
        self.index.keys.insert(0, pivot)
        return size

    def _random_split(self, s):
        '''Single partition round around a uniformly random non-minimum
        element, so both sides are nonempty.'''
        meter = self.meter
        nodes = list(s.iter_nodes())
        size = len(nodes)
        s.head.next = s.tail
        s.tail.prev = s.head
        s.size = 0
        min_i = 0
        for i in range(1, size):
            if nodes[i].key < nodes[min_i].key:
                min_i = i
        j = self._rng.randrange(size - 1)
        if j >= min_i:
            j += 1
        pivot = nodes[j].key
        low = LinkedSet()
        high = LinkedSet()
        for node in nodes:
            if node.key < pivot:
                low.append(node)
            else:
                high.append(node)
        meter.comparisons += 2 * size - 1
        meter.node_moves += size
        meter.list_links += size
        meter.selection_elements += 2 * size
        return low, high, pivot

    def _forget_pivots(self):
        '''Drop empty sets, then sweep once left to right concatenating
        any adjacent pair that is smaller than its prefix.  The merged
        set keeps absorbing successors until the rule no longer fires.
        O(l) plus O(1) per concatenation.'''
        sets = self.sets
        pivots = self.index.keys
        meter = self.meter
        new_sets = []
        new_pivots = []
        prefix = 0  # elements strictly before the current tail set
        for i, s in enumerate(sets):
            if s.size == 0:
                continue
            if not new_sets:
                new_sets.append(s)
                continue
            tail = new_sets[-1]
            if tail.size + s.size < prefix:
                tail.concat(s)
                meter.list_links += 1
            else:
                prefix += tail.size
                new_pivots.append(pivots[i - 1])
                new_sets.append(s)
        self.sets = new_sets
        pivots[:] = new_pivots
        self._fresh_partition = True

    def __repr__(self):
        return 'LPHeap(n=%d, sets=%r)' % (self.n,
                                          [s.size for s in self.sets])
