"""Pure-Python reduction kernel.

Monomials are packed into Python ints, 16 bits per variable with bit 15
of each field reserved as a guard bit so that divisibility is one
subtraction.  The monomial order is folded into a second integer key that
is linear in the exponents, so ``key(u*v) = key(u) + key(v)``.
"""

from heapq import heapify, heappop, heappush

from .errors import ZeroPolynomial

_SHIFT = 16
_MAX_EXP = (1 << 15) - 1
_BIG = 1 << 40

NAME = "python"


class KPoly:
    """Terms in descending order: parallel lists of keys, packed monomials and codes."""

    __slots__ = ("keys", "monos", "coeffs")

    def __init__(self, keys, monos, coeffs):
        self.keys = keys
        self.monos = monos
        self.coeffs = coeffs

    def __len__(self):
        return len(self.keys)


class Context:
    """Arithmetic context for one (field, number of variables, order) triple."""

    def __init__(self, field, nvars, weights):
        self.field = field
        self.nvars = nvars
        nrows = len(weights)
        self.kweights = [
            sum(weights[r][j] * _BIG ** (nrows - 1 - r) for r in range(nrows)) for j in range(nvars)
        ]
        self.guard = sum(1 << (_SHIFT * j + 15) for j in range(nvars))
        self.mask = (1 << _SHIFT) - 1
        p, k = field.p, field.k
        if k == 1:
            self._kind = "prime"
        elif p == 2:
            self._kind = "char2"
        else:
            self._kind = "general"

    # -- conversion ---------------------------------------------------------
    def pack(self, exps):
        mono = 0
        key = 0
        kw = self.kweights
        for j, a in enumerate(exps):
            if a:
                if a > _MAX_EXP:
                    raise OverflowError(f"exponent {a} exceeds {_MAX_EXP}")
                mono |= a << (_SHIFT * j)
                key += a * kw[j]
        return key, mono

    def unpack(self, mono):
        mask = self.mask
        return tuple((mono >> (_SHIFT * j)) & mask for j in range(self.nvars))

    def encode(self, items):
        rows = []
        for exps, c in items:
            if c:
                key, mono = self.pack(exps)
                rows.append((key, mono, c))
        rows.sort(reverse=True)
        out_k, out_m, out_c = [], [], []
        field = self.field
        for key, mono, c in rows:
            if out_k and out_k[-1] == key:
                s = field.add(out_c[-1], c)
                if s:
                    out_c[-1] = s
                else:
                    out_k.pop()
                    out_m.pop()
                    out_c.pop()
            else:
                out_k.append(key)
                out_m.append(mono)
                out_c.append(c)
        return KPoly(out_k, out_m, out_c)

    def decode(self, f):
        unpack = self.unpack
        return [(unpack(m), c) for m, c in zip(f.monos, f.coeffs)]

    # -- basic queries ------------------------------------------------------
    def is_zero(self, f):
        return not f.keys

    def lead(self, f):
        if not f.keys:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.unpack(f.monos[0])

    def lead_coeff(self, f):
        return f.coeffs[0]

    def monic(self, f):
        if not f.keys or f.coeffs[0] == 1:
            return f
        field = self.field
        inv = field.inv(f.coeffs[0])
        mul = field.mul
        return KPoly(list(f.keys), list(f.monos), [mul(inv, c) for c in f.coeffs])

    def divides(self, a, b):
        """True iff packed monomial a divides packed monomial b."""
        g = self.guard
        return ((b | g) - a) & g == g

    # -- kernels --------------------------------------------------------------
    def _scaled(self, factor, coeffs):
        field = self.field
        kind = self._kind
        if kind == "prime":
            p = field.p
            return [factor * c % p for c in coeffs]
        exp, log = field.exp_table, field.log_table
        lf = log[factor]
        return [exp[lf + log[c]] for c in coeffs]

    def _adder(self):
        field = self.field
        kind = self._kind
        if kind == "prime":
            p = field.p
            return lambda a, b: (a + b) % p
        if kind == "char2":
            return int.__xor__
        table = field.add_table
        if table is not None:
            return lambda a, b: table[a][b]
        return field.add

    def spoly(self, f, g):
        """S-polynomial of two nonzero polynomials."""
        fe, ge = self.lead(f), self.lead(g)
        lcm = tuple(max(a, b) for a, b in zip(fe, ge))
        uf = self.pack(tuple(a - b for a, b in zip(lcm, fe)))
        ug = self.pack(tuple(a - b for a, b in zip(lcm, ge)))
        field = self.field
        cf = field.inv(f.coeffs[0])
        cg = field.neg(field.inv(g.coeffs[0]))
        fk, fm = uf
        gk, gm = ug
        add = self._adder()
        acc = {}
        for shift_k, shift_m, factor, poly in ((fk, fm, cf, f), (gk, gm, cg, g)):
            sc = self._scaled(factor, poly.coeffs[1:])
            for key, mono, c in zip(poly.keys[1:], poly.monos[1:], sc):
                key += shift_k
                slot = acc.get(key)
                if slot is None:
                    acc[key] = [mono + shift_m, c]
                else:
                    slot[1] = add(slot[1], c)
        keys = sorted((k for k, v in acc.items() if v[1]), reverse=True)
        return KPoly(keys, [acc[k][0] for k in keys], [acc[k][1] for k in keys])

    def reduce(self, f, basis, full=True):
        """Remainder of f on division by ``basis``; returns ``(remainder, steps)``.

        The largest remaining term is reduced by the first basis element
        whose leading monomial divides it.
        """
        if not f.keys:
            return f, 0
        field = self.field
        inv, neg = field.inv, field.neg
        guard = self.guard
        add = self._adder()
        leads = [(g.monos[0], g.keys[0], neg(inv(g.coeffs[0])), g) for g in basis if g.keys]
        acc = {k: [m, c] for k, m, c in zip(f.keys, f.monos, f.coeffs)}
        heap = [-k for k in f.keys]
        heapify(heap)
        out_k, out_m, out_c = [], [], []
        steps = 0
        mul = field.mul
        while heap:
            key = -heappop(heap)
            slot = acc.pop(key, None)
            if slot is None:
                continue
            mono, c = slot
            if not c:
                continue
            for lm, lk, nlc_inv, g in leads:
                if ((mono | guard) - lm) & guard == guard:
                    break
            else:
                out_k.append(key)
                out_m.append(mono)
                out_c.append(c)
                if not full:
                    rest = sorted((k for k, v in acc.items() if v[1]), reverse=True)
                    out_k.extend(rest)
                    out_m.extend(acc[k][0] for k in rest)
                    out_c.extend(acc[k][1] for k in rest)
                    break
                continue
            steps += 1
            sk = key - lk
            sm = mono - lm
            sc = self._scaled(mul(c, nlc_inv), g.coeffs[1:])
            for gk, gm, gc in zip(g.keys[1:], g.monos[1:], sc):
                gk += sk
                slot = acc.get(gk)
                if slot is None:
                    acc[gk] = [gm + sm, gc]
                    heappush(heap, -gk)
                else:
                    slot[1] = add(slot[1], gc)
        return KPoly(out_k, out_m, out_c), steps

    def groebner(self, polys):
        """Minimal Gröbner basis of nonzero kernel polynomials.

        Normal strategy (smallest lcm degree, then newest index, then oldest)
        with the Gebauer-Möller update.  Returns ``(basis, counters)`` with
        counters ``(spairs, skipped_pairs, zero_reductions, reduction_steps)``.
        """
        guard = self.guard
        basis = []
        leads = []
        packed = []
        active = []
        pairs = []
        spairs = skipped = zeros = steps_total = 0

        def divides(a, b):
            return ((b | guard) - a) & guard == guard

        def install(h):
            nonlocal skipped
            lh = leads[h]
            ph = packed[h]
            cands = []
            for g in active:
                lg = leads[g]
                lcm = tuple(a if a > b else b for a, b in zip(lh, lg))
                disjoint = all(not (a and b) for a, b in zip(lh, lg))
                cands.append((g, lcm, self.pack(lcm)[1], disjoint))
            kept = []
            for idx, (g1, l1, p1, disjoint) in enumerate(cands):
                if disjoint:
                    kept.append(cands[idx])
                    continue
                if any(divides(c[2], p1) for c in cands[idx + 1 :]):
                    continue
                if any(divides(c[2], p1) for c in kept):
                    continue
                kept.append(cands[idx])
            skipped += len(cands) - len(kept)
            new_pairs = []
            for g1, l1, p1, disjoint in kept:
                if disjoint:
                    skipped += 1
                else:
                    new_pairs.append((sum(l1), h, g1, l1, p1))
            survivors = []
            for pair in pairs:
                _, j, i, l12, p12 = pair
                if divides(ph, p12):
                    li, lj = leads[i], leads[j]
                    if (
                        tuple(a if a > b else b for a, b in zip(li, lh)) != l12
                        and tuple(a if a > b else b for a, b in zip(lj, lh)) != l12
                    ):
                        skipped += 1
                        continue
                survivors.append(pair)
            survivors.extend(new_pairs)
            heapify(survivors)
            pairs[:] = survivors
            active[:] = [g for g in active if not divides(ph, packed[g])] + [h]

        def add(r):
            r = self.monic(r)
            basis.append(r)
            leads.append(self.lead(r))
            packed.append(r.monos[0])
            install(len(basis) - 1)

        for f in polys:
            r, steps = self.reduce(f, [basis[a] for a in active])
            steps_total += steps
            if r.keys:
                add(r)
        while pairs:
            _, j, i, _, _ = heappop(pairs)
            spairs += 1
            r, steps = self.reduce(self.spoly(basis[i], basis[j]), [basis[a] for a in active])
            steps_total += steps
            if r.keys:
                add(r)
            else:
                zeros += 1
        return [basis[a] for a in active], (spairs, skipped, zeros, steps_total)
