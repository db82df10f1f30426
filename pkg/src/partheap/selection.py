'''Rank selection over linked sets.

Two interchangeable strategies sit behind the same rank contract:

  - deterministic median-of-medians (groups of five), the default;
  - seeded quickselect, expected linear.

Both report their work to a CostMeter: ``selection_elements`` grows by
the size of every subarray processed, ``comparisons`` by a linear
charge per pass.  The counts are what the linearity tests measure, so
they must stay proportional to real work; they are not required to be
compare-exact.
'''

from .core import LinkedSet

_SMALL = 25


def mom_select(keys, k, meter=None):
    '''Return the 0-based k-th smallest of ``keys`` (list is consumed).

    Deterministic worst-case linear time via median-of-medians pivots.
    '''
    arr = keys
    while True:
        n = len(arr)
        if meter is not None:
            meter.selection_elements += n
        if n <= _SMALL:
            if meter is not None and n > 1:
                meter.comparisons += n * (n - 1).bit_length()
            arr.sort()
            return arr[k]
        medians = []
        i = 0
        while i < n:
            group = sorted(arr[i:i + 5])
            medians.append(group[len(group) // 2])
            i += 5
        if meter is not None:
            meter.comparisons += 7 * ((n + 4) // 5)
        pivot = mom_select(medians, len(medians) // 2, meter)
        arr, k = _partition_step(arr, k, pivot, meter)
        if arr is None:
            return pivot


def quickselect(keys, k, rng, meter=None):
    '''Return the 0-based k-th smallest of ``keys`` using random pivots.'''
    arr = keys
    while True:
        n = len(arr)
        if meter is not None:
            meter.selection_elements += n
        if n <= _SMALL:
            if meter is not None and n > 1:
                meter.comparisons += n * (n - 1).bit_length()
            arr.sort()
            return arr[k]
        pivot = arr[rng.randrange(n)]
        arr, k = _partition_step(arr, k, pivot, meter)
        if arr is None:
            return pivot


def _partition_step(arr, k, pivot, meter):
    '''Three-way partition; return (next subarray, next k) or (None, _)
    when the pivot itself is the answer.'''
    lows = []
    highs = []
    if meter is not None:
        meter.comparisons += len(arr)
    for x in arr:
        if x < pivot:
            lows.append(x)
        elif pivot < x:
            highs.append(x)
    n_low = len(lows)
    n_eq = len(arr) - n_low - len(highs)
    if k < n_low:
        return lows, k
    if k < n_low + n_eq:
        return None, k
    return highs, k - n_low - n_eq


def select_rank(linked_set, r, meter=None):
    '''Return the r-th smallest key (1-based) of ``linked_set``.

    The set is not modified.  Element touches are linear in the set
    size (median-of-medians).
    '''
    if not 1 <= r <= linked_set.size:
        raise ValueError('rank %d out of range 1..%d' % (r, linked_set.size))
    keys = linked_set.keys()
    if meter is not None:
        meter.selection_elements += len(keys)
    return mom_select(keys, r - 1, meter)


def select_rank_randomized(linked_set, r, rng, meter=None):
    '''select_rank with seeded quickselect instead of median-of-medians.'''
    if not 1 <= r <= linked_set.size:
        raise ValueError('rank %d out of range 1..%d' % (r, linked_set.size))
    keys = linked_set.keys()
    if meter is not None:
        meter.selection_elements += len(keys)
    return quickselect(keys, r - 1, rng, meter)


def split_by_rank(linked_set, r, meter=None, rng=None):
    '''Destructively split a set at rank ``r``.

    Returns ``(low, high, pivot)`` where ``low`` holds the r smallest
    elements, ``high`` the rest and ``pivot = min(high)`` is the
    (r+1)-th smallest key.  Node identities are preserved, so handles
    into the original set stay valid.  Keys must be distinct (heap keys
    always are).
    '''
    size = linked_set.size
    if size < 2 or not 1 <= r < size:
        raise ValueError('rank %d out of range 1..%d' % (r, size - 1))
    if rng is None:
        pivot = select_rank(linked_set, r + 1, meter)
    else:
        pivot = select_rank_randomized(linked_set, r + 1, rng, meter)
    low, high = _partition_nodes(linked_set, pivot, meter)
    assert low.size == r and high.size == size - r
    return low, high, pivot


def _partition_nodes(linked_set, pivot, meter):
    '''Distribute all nodes of ``linked_set`` into two fresh sets by
    comparing against ``pivot`` (strictly-below goes low).  Consumes
    the input set.'''
    nodes = list(linked_set.iter_nodes())
    size = len(nodes)
    linked_set.head.next = linked_set.tail
    linked_set.tail.prev = linked_set.head
    linked_set.size = 0
    low = LinkedSet()
    high = LinkedSet()
    for node in nodes:
        if node.key < pivot:
            low.append(node)
        else:
            high.append(node)
    if meter is not None:
        meter.comparisons += size
        meter.node_moves += size
        meter.list_links += size
        meter.selection_elements += size
    return low, high
