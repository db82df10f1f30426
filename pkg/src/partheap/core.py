'''Shared primitives for partition-based heaps.

All heaps in this package store their elements in unordered buckets
("sets") backed by intrusive doubly-linked lists, separated by pivot
keys.  This module provides the pieces they share:

  - keys: ``(user_key, seq)`` tuples, where ``seq`` is a per-heap
    insertion counter.  The pair gives a strict total order, so two
    live elements never compare equal even when their user keys do.
  - Node / LinkedSet: the intrusive list.  A node is also the stable
    handle returned by ``insert``; it survives every restructuring and
    is what ``decrease_key`` and ``delete`` take.
  - PivotIndex: a sorted array of pivot keys with counted binary search.
  - CostMeter: plain counters that define the "actual cost" used by the
    instrumentation-level tests.
'''


class HeapError(Exception):
    '''Base class for heap usage errors.'''


class EmptyHeapError(HeapError):
    '''Raised by delete_min / find_min on an empty heap.'''


class DeadHandleError(HeapError):
    '''Raised when an operation dereferences a handle whose element
    was already deleted.'''


class KeyOrderError(HeapError):
    '''Raised when decrease_key is asked to increase a key (or
    increase_key to decrease one).'''


class Node:
    '''One stored element; doubles as the stable handle.

    ``key`` is a ``(user_key, seq)`` tuple.  ``alive`` turns False when
    the element leaves the heap for good; restructuring never touches it.
    '''

    __slots__ = ('key', 'prev', 'next', 'alive')

    def __init__(self, key):
        self.key = key
        self.prev = None
        self.next = None
        self.alive = True

    def __repr__(self):
        state = '' if self.alive else ', dead'
        return 'Node(%r%s)' % (self.key, state)


# The public handle type is just the node.
Handle = Node


class LinkedSet:
    '''Intrusive doubly-linked list with sentinels and an explicit size.

    append / remove / concat touch O(1) nodes each.  Nodes keep their
    identity across every operation, which is what makes handles stable.
    '''

    __slots__ = ('head', 'tail', 'size')

    def __init__(self):
        head = Node(None)
        tail = Node(None)
        head.next = tail
        tail.prev = head
        self.head = head
        self.tail = tail
        self.size = 0

    def __len__(self):
        return self.size

    def append(self, node):
        tail = self.tail
        last = tail.prev
        last.next = node
        node.prev = last
        node.next = tail
        tail.prev = node
        self.size += 1

    def remove(self, node):
        node.prev.next = node.next
        node.next.prev = node.prev
        node.prev = None
        node.next = None
        self.size -= 1

    def concat(self, other, meter=None):
        '''Splice all of ``other`` onto the end of this set (O(1)).

        ``other`` is left empty.  Node identities are preserved.
        '''
        if meter is not None:
            meter.list_links += 1
        if other.size == 0:
            return
        first = other.head.next
        last = other.tail.prev
        at = self.tail.prev
        at.next = first
        first.prev = at
        last.next = self.tail
        self.tail.prev = last
        self.size += other.size
        other.head.next = other.tail
        other.tail.prev = other.head
        other.size = 0

    def iter_nodes(self):
        at = self.head.next
        tail = self.tail
        while at is not tail:
            nxt = at.next
            yield at
            at = nxt

    def keys(self):
        '''All keys in list order (one pass).'''
        out = []
        at = self.head.next
        tail = self.tail
        while at is not tail:
            out.append(at.key)
            at = at.next
        return out

    def min_node(self, meter=None):
        '''Scan for the node with the smallest key (size - 1 comparisons).'''
        best = self.head.next
        at = best.next
        tail = self.tail
        while at is not tail:
            if at.key < best.key:
                best = at
            at = at.next
        if meter is not None and self.size > 1:
            meter.comparisons += self.size - 1
        return best

    def __repr__(self):
        return 'LinkedSet(size=%d)' % self.size


class CostMeter:
    '''Counters defining "actual cost" for the instrumented tests.

    comparisons        key-versus-key comparisons (binary searches,
                       min scans, selection, partition passes)
    node_moves         nodes relocated between lists, one per append
    list_links         O(1) pointer-splice events (append/remove/concat)
    selection_elements elements handled by selection/partition passes,
                       counted once per pass over a subarray
    '''

    __slots__ = ('comparisons', 'node_moves', 'list_links',
                 'selection_elements')

    def __init__(self):
        self.comparisons = 0
        self.node_moves = 0
        self.list_links = 0
        self.selection_elements = 0

    def reset(self):
        self.comparisons = 0
        self.node_moves = 0
        self.list_links = 0
        self.selection_elements = 0

    def snapshot(self):
        return (self.comparisons, self.node_moves, self.list_links,
                self.selection_elements)

    def total_touches(self):
        return (self.comparisons + self.node_moves +
                self.selection_elements)

    def __repr__(self):
        return ('CostMeter(cmp=%d, moves=%d, links=%d, sel=%d)' %
                self.snapshot())


def pivot_search(pivots, key, meter=None):
    '''Locate ``key`` among sorted ``pivots``; return a 1-based position.

    Position ``i`` means the key belongs to the i-th interval: every
    pivot at index < i-1 is <= key and every later pivot is > key (the
    lower end of each interval is inclusive).  An empty pivot array
    returns 1.  Uses ceil(lg(len+1)) key comparisons, all counted.
    '''
    lo = 0
    hi = len(pivots)
    comps = 0
    while lo < hi:
        mid = (lo + hi) >> 1
        comps += 1
        if key < pivots[mid]:
            hi = mid
        else:
            lo = mid + 1
    if meter is not None:
        meter.comparisons += comps
    return lo + 1


class PivotIndex:
    '''Sorted array of pivot keys supporting counted binary search.

    The heap keeps its sets in a parallel sequence; ``search`` returns
    the 1-based set position for a key.  ``keys[i]`` is the inclusive
    lower bound of set position ``i + 2`` (the first set has none).
    '''

    __slots__ = ('keys',)

    def __init__(self, keys=()):
        self.keys = list(keys)

    def __len__(self):
        return len(self.keys)

    def search(self, key, meter=None):
        return pivot_search(self.keys, key, meter)

    def rebuild(self, keys):
        self.keys = list(keys)

    def well_formed(self):
        ks = self.keys
        return all(ks[i] <= ks[i + 1] for i in range(len(ks) - 1))

    def __repr__(self):
        return 'PivotIndex(%r)' % (self.keys,)
