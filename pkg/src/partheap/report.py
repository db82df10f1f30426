'''Summaries over cost files written by the runner.

Per file: one aggregate row per op kind (count, mean and max
comparisons, counter totals).  Across files: a scaling table keyed by
each file's insert count n, reporting total element touches divided by
n*lg(n) and that ratio relative to the smallest n present.
'''

import csv
import json
import math

from .runner import COST_FIELDS


def read_costs(path):
    rows = []
    with open(path, newline='') as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or \
                tuple(reader.fieldnames) != COST_FIELDS:
            raise ValueError('%s: malformed costs file header' % path)
        for rec in reader:
            try:
                rows.append({
                    'op_kind': rec['op_kind'],
                    'comparisons': int(rec['comparisons']),
                    'node_moves': int(rec['node_moves']),
                    'list_links': int(rec['list_links']),
                    'selection_elements': int(rec['selection_elements']),
                })
            except (KeyError, TypeError, ValueError):
                raise ValueError('%s: malformed costs row %r' % (path, rec))
    return rows


def summarize_file(path):
    rows = read_costs(path)
    per_kind = {}
    touches = 0
    for row in rows:
        kind = row['op_kind']
        agg = per_kind.get(kind)
        if agg is None:
            agg = per_kind[kind] = {
                'count': 0, 'comparisons': 0, 'max_comparisons': 0,
                'node_moves': 0, 'list_links': 0, 'selection_elements': 0,
            }
        agg['count'] += 1
        agg['comparisons'] += row['comparisons']
        if row['comparisons'] > agg['max_comparisons']:
            agg['max_comparisons'] = row['comparisons']
        agg['node_moves'] += row['node_moves']
        agg['list_links'] += row['list_links']
        agg['selection_elements'] += row['selection_elements']
        touches += (row['comparisons'] + row['node_moves'] +
                    row['selection_elements'])
    for agg in per_kind.values():
        agg['mean_comparisons'] = agg['comparisons'] / agg['count']
    n = per_kind.get('insert', {}).get('count', 0)
    return {
        'path': path,
        'ops': len(rows),
        'n_inserts': n,
        'total_touches': touches,
        'per_kind': per_kind,
    }


def scaling_rows(summaries):
    '''Touches / (n lg n) per summary, plus the ratio to the smallest n.'''
    usable = [s for s in summaries if s['n_inserts'] >= 2]
    usable.sort(key=lambda s: s['n_inserts'])
    out = []
    base = None
    for s in usable:
        n = s['n_inserts']
        norm = s['total_touches'] / (n * math.log2(n))
        if base is None:
            base = norm
        out.append({
            'path': s['path'],
            'n': n,
            'touches': s['total_touches'],
            'touches_per_nlgn': norm,
            'vs_smallest': norm / base if base else 0.0,
        })
    return out


def summarize(paths):
    summaries = [summarize_file(p) for p in paths]
    return {'files': summaries, 'scaling': scaling_rows(summaries)}


def format_text(summary):
    lines = []
    for s in summary['files']:
        lines.append('%s  (%d ops, %d inserts, %d touches)'
                     % (s['path'], s['ops'], s['n_inserts'],
                        s['total_touches']))
        lines.append('  %-14s %8s %12s %8s %10s %10s'
                     % ('op', 'count', 'mean cmp', 'max cmp',
                        'moves', 'selection'))
        for kind in sorted(s['per_kind']):
            agg = s['per_kind'][kind]
            lines.append('  %-14s %8d %12.2f %8d %10d %10d'
                         % (kind, agg['count'], agg['mean_comparisons'],
                            agg['max_comparisons'], agg['node_moves'],
                            agg['selection_elements']))
    if len(summary['scaling']) > 1:
        lines.append('')
        lines.append('scaling (element touches / n lg n):')
        lines.append('  %10s %14s %16s %12s'
                     % ('n', 'touches', 'touches/nlgn', 'vs smallest'))
        for row in summary['scaling']:
            lines.append('  %10d %14d %16.3f %12.3f'
                         % (row['n'], row['touches'],
                            row['touches_per_nlgn'], row['vs_smallest']))
    return '\n'.join(lines)


def write_json(summary, path):
    with open(path, 'w') as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write('\n')
