'''Trace replay over any implementation, with cost telemetry.

One CostRow is emitted per executed operation, carrying the deltas of
the heap's CostMeter counters plus the total potential before and
after when --phi tracking is on.  Replays are deterministic given
(trace, impl, seed).
'''

import csv
from concurrent.futures import ProcessPoolExecutor

from .core import HeapError
from .exp import ExpHeap
from .fhtng import FHTNGHeap
from .lp import LPHeap
from .oracle import OracleHeap
from .potential import attach_ledger, lemma_check
from .traces import Trace
from .validation import audit

IMPLS = {
    'lp': LPHeap,
    'fhtng': FHTNGHeap,
    'exp': ExpHeap,
    'oracle': OracleHeap,
}

COST_FIELDS = ('op_index', 'op_kind', 'comparisons', 'node_moves',
               'list_links', 'selection_elements', 'phi_before', 'phi_after')


def make_heap(impl, select='det', seed=0):
    try:
        cls = IMPLS[impl]
    except KeyError:
        raise ValueError('unknown implementation %r (expected %s)'
                         % (impl, ', '.join(sorted(IMPLS))))
    return cls(selection=select, seed=seed)


def total_phi(heap):
    kind = heap.kind
    if kind == 'lp':
        return heap.potential_phi()
    if kind in ('fhtng', 'exp'):
        return sum(heap.potential())
    return 0


def _outcome(fn):
    try:
        return ('ok', fn())
    except HeapError as exc:
        return (type(exc).__name__, None)


class RunResult:
    __slots__ = ('ok', 'fail_op', 'reason', 'ops', 'outputs', 'ledger',
                 'lemma', 'heap')

    def __init__(self):
        self.ok = True
        self.fail_op = None
        self.reason = ''
        self.ops = 0
        self.outputs = []
        self.ledger = None
        self.lemma = None
        self.heap = None

    def __repr__(self):
        if self.ok:
            return 'RunResult(pass, %d ops)' % self.ops
        return 'RunResult(FAIL at op %s: %s)' % (self.fail_op, self.reason)


def run_trace(trace, impl='lp', select='det', seed=0, audit_every=0,
              oracle=False, phi=False, costs_path=None,
              collect_outputs=False):
    '''Replay ``trace``; return a RunResult.

    oracle=True mirrors every operation on OracleHeap and demands
    matching outcomes; audit_every=N audits the structure every N ops;
    phi=True attaches a PotentialLedger and runs the exact budget
    checks at the end; costs_path writes the per-op CSV.
    '''
    heap = make_heap(impl, select, seed)
    result = RunResult()
    result.heap = heap
    if phi and impl != 'oracle':
        result.ledger = attach_ledger(heap)
    shadow = OracleHeap() if (oracle and impl != 'oracle') else None
    handles = []
    mirrors = []
    writer = None
    fh = None
    if costs_path is not None:
        fh = open(costs_path, 'w', newline='')
        writer = csv.writer(fh)
        writer.writerow(COST_FIELDS)
    meter = heap.meter
    try:
        for idx, op in enumerate(trace.ops):
            phi_before = total_phi(heap) if phi else 0
            c0 = meter.comparisons
            m0 = meter.node_moves
            l0 = meter.list_links
            s0 = meter.selection_elements
            tag = op[0]
            if tag == 'i':
                kind = 'insert'
                handles.append(heap.insert(op[1]))
                if shadow is not None:
                    mirrors.append(shadow.insert(op[1]))
            elif tag == 'd':
                kind = 'delete_min'
                got = _outcome(heap.delete_min)
                if collect_outputs:
                    result.outputs.append(got)
                if shadow is not None:
                    want = _outcome(shadow.delete_min)
                    if got != want:
                        result.ok = False
                        result.fail_op = idx
                        result.reason = ('delete_min %r vs oracle %r'
                                         % (got, want))
                        break
            else:
                kind = 'decrease_key'
                hid = op[1]
                if not 0 <= hid < len(handles):
                    raise ValueError('op %d references unknown handle %d'
                                     % (idx, hid))
                got = _outcome(lambda: heap.decrease_key(handles[hid], op[2]))
                if shadow is not None:
                    want = _outcome(
                        lambda: shadow.decrease_key(mirrors[hid], op[2]))
                    if got != want:
                        result.ok = False
                        result.fail_op = idx
                        result.reason = ('decrease_key %r vs oracle %r'
                                         % (got, want))
                        break
            result.ops += 1
            if writer is not None:
                writer.writerow((idx, kind,
                                 meter.comparisons - c0,
                                 meter.node_moves - m0,
                                 meter.list_links - l0,
                                 meter.selection_elements - s0,
                                 phi_before,
                                 total_phi(heap) if phi else 0))
            if audit_every and (idx + 1) % audit_every == 0:
                report = audit(heap)
                if not report.passed:
                    result.ok = False
                    result.fail_op = idx
                    result.reason = repr(report)
                    break
    finally:
        if fh is not None:
            fh.close()
    if result.ok and audit_every and heap.kind != 'oracle':
        report = audit(heap)
        if not report.passed:
            result.ok = False
            result.fail_op = result.ops - 1
            result.reason = repr(report)
    if result.ok and result.ledger is not None:
        result.lemma = lemma_check(result.ledger)
        if not result.lemma.passed:
            result.ok = False
            row, bound = result.lemma.violations[0]
            result.reason = ('potential budget exceeded: %r > %d'
                             % (row, bound))
    return result


def _compare_worker(args):
    ops, impl, select, seed = args
    res = run_trace(Trace(ops), impl=impl, select=select, seed=seed,
                    collect_outputs=True)
    return impl, res.outputs


def compare_traces(trace, impls=('lp', 'fhtng', 'exp'), select='det',
                   seed=0, workers=1):
    '''Replay one trace on several implementations; return
    (all_equal, {impl: outputs}).'''
    results = {}
    if workers > 1:
        jobs = [(trace.ops, impl, select, seed) for impl in impls]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for impl, outputs in pool.map(_compare_worker, jobs):
                results[impl] = outputs
    else:
        for impl in impls:
            res = run_trace(trace, impl=impl, select=select, seed=seed,
                            collect_outputs=True)
            results[impl] = res.outputs
    baseline = None
    all_equal = True
    for impl in impls:
        if baseline is None:
            baseline = results[impl]
        elif results[impl] != baseline:
            all_equal = False
    return all_equal, results
