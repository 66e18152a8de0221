"""Independent brute-force counters used to check the miner and matcher.

Written straight from the pattern definition as naive nested loops over
token windows; deliberately shares no scanning code with the package.
"""

from pvckit.matcher import realize_verb


def _is_adp(tag):
    return tag.startswith('J')


def oracle_stats(corpus):
    """Naive window scan: per-stem totals, distinct sets, standalone counts."""
    per_stem = {}
    standalone = {}
    for sentence in corpus:
        toks = list(sentence.tokens)
        n = len(toks)
        for j in range(n):
            if not _is_adp(toks[j].tag):
                continue
            # adposition must close its eojeol
            if j + 1 < n and toks[j + 1].eojeol_index == toks[j].eojeol_index:
                continue
            # back up over the whole adposition run; a host token must remain
            a = j
            while (a - 1 >= 0 and _is_adp(toks[a - 1].tag)
                   and toks[a - 1].eojeol_index == toks[j].eojeol_index):
                a -= 1
            if a == 0 or toks[a - 1].eojeol_index != toks[j].eojeol_index:
                continue
            adposition = ''.join(t.surface for t in toks[a:j + 1])
            # skip whole adverb eojeols
            k = j + 1
            while k < n and toks[k].tag == 'MAG':
                k += 1
            if k >= n:
                continue
            stem_tok = toks[k]
            if not (stem_tok.tag == 'XR' or stem_tok.tag.startswith('N')):
                continue
            # the stem must open its eojeol
            if toks[k - 1].eojeol_index == stem_tok.eojeol_index:
                continue
            if k + 1 >= n:
                continue
            ha = toks[k + 1]
            if not (ha.surface == '하'
                    and (ha.tag == 'XSV' or ha.tag.startswith('V'))
                    and ha.eojeol_index == stem_tok.eojeol_index):
                continue
            m = k + 2
            eps = []
            while (m < n and toks[m].tag == 'EP'
                   and toks[m].eojeol_index == stem_tok.eojeol_index):
                eps.append(toks[m].surface)
                m += 1
            if m >= n or toks[m].eojeol_index != stem_tok.eojeol_index:
                continue
            if not toks[m].tag.startswith('E') or toks[m].tag == 'EP':
                continue
            # anything after the ending inside the eojeol must be particles
            t = m + 1
            clean = True
            while t < n and toks[t].eojeol_index == stem_tok.eojeol_index:
                if not _is_adp(toks[t].tag):
                    clean = False
                    break
                t += 1
            if not clean:
                continue
            suffix = realize_verb(eps + [toks[m].surface])
            stem = stem_tok.surface
            entry = per_stem.setdefault(
                stem, {'total': 0, 'adps': set(), 'suffixes': set(),
                       'triples': set()})
            entry['total'] += 1
            entry['adps'].add(adposition)
            entry['suffixes'].add(suffix)
            entry['triples'].add((adposition, suffix))
        for i in range(n):
            if not toks[i].tag.startswith('N'):
                continue
            if (i + 1 < n and toks[i + 1].surface == '하'
                    and toks[i + 1].tag == 'XSV'):
                continue
            standalone[toks[i].surface] = standalone.get(toks[i].surface, 0) + 1
    return per_stem, standalone


def oracle_rows(corpus, k=300):
    """Ranked report rows as plain tuples, mirroring the TSV columns."""
    per_stem, standalone = oracle_stats(corpus)
    rows = []
    for stem, entry in per_stem.items():
        alone = standalone.get(stem, 0)
        rows.append((stem, entry['total'], len(entry['adps']),
                     len(entry['suffixes']), len(entry['triples']), alone,
                     entry['total'] / (entry['total'] + alone)))
    rows.sort(key=lambda r: (-r[1], r[0]))
    return rows[:k]


def oracle_tsv(corpus, k=300):
    header = 'stem\ttotal\tdistinct_adps\tdistinct_suffixes\tdistinct_triples\tstandalone\tboundness'
    lines = [header]
    for stem, total, adps, suffixes, triples, alone, bound in oracle_rows(corpus, k):
        lines.append(f"{stem}\t{total}\t{adps}\t{suffixes}\t{triples}\t{alone}\t{bound:.4f}")
    return ('\n'.join(lines) + '\n').encode('utf-8')
