# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel; same interface as ``vanideal._pykernel``.

A polynomial is a C array of terms in descending order.  Each term occupies
``stride = nvars + nrows + 1`` int64 slots: exponents, order key (the weight
matrix applied to the exponents), coefficient code.  Reduction steps merge
the remainder with a shifted, scaled basis element.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy
from libc.stdint cimport int64_t

from .errors import ZeroPolynomial

NAME = "cython"

_MAX_EXP = 32767


cdef class KPoly:
    cdef int64_t* data
    cdef Py_ssize_t n
    cdef int stride

    def __dealloc__(self):
        if self.data != NULL:
            free(self.data)

    def __len__(self):
        return self.n


cdef KPoly _wrap(int64_t* data, Py_ssize_t n, int stride):
    cdef KPoly f = KPoly.__new__(KPoly)
    f.data = data
    f.n = n
    f.stride = stride
    return f


cdef int64_t* _alloc(Py_ssize_t nterms, int stride) except NULL:
    cdef Py_ssize_t size = nterms if nterms > 0 else 1
    cdef int64_t* p = <int64_t*> malloc(size * stride * sizeof(int64_t))
    if p == NULL:
        raise MemoryError()
    return p


cdef class Context:
    cdef public object field
    cdef public int nvars
    cdef int nrows, stride, kind
    cdef int64_t p, q, q1
    cdef int64_t* weights
    cdef int64_t* exp_t
    cdef int64_t* log_t
    cdef int64_t* zech_t
    cdef int64_t* neg_t

    def __cinit__(self):
        self.weights = NULL
        self.exp_t = NULL
        self.log_t = NULL
        self.zech_t = NULL
        self.neg_t = NULL

    def __init__(self, field, int nvars, weights):
        cdef Py_ssize_t i, j
        self.field = field
        self.nvars = nvars
        self.nrows = len(weights)
        self.stride = nvars + self.nrows + 1
        self.p = field.p
        self.q = field.q
        self.q1 = self.q - 1
        if field.k == 1:
            self.kind = 0
        elif field.p == 2:
            self.kind = 1
        else:
            self.kind = 2
        self.weights = <int64_t*> malloc(max(1, self.nrows * nvars) * sizeof(int64_t))
        for i in range(self.nrows):
            for j in range(nvars):
                self.weights[i * nvars + j] = weights[i][j]
        exp, log = field.exp_table, field.log_table
        self.exp_t = <int64_t*> malloc(max(2, len(exp)) * sizeof(int64_t))
        self.log_t = <int64_t*> malloc(self.q * sizeof(int64_t))
        self.neg_t = <int64_t*> malloc(self.q * sizeof(int64_t))
        for i in range(len(exp)):
            self.exp_t[i] = exp[i]
        self.log_t[0] = -1
        for i in range(1, self.q):
            self.log_t[i] = log[i]
            self.neg_t[i] = field.neg(i)
        self.neg_t[0] = 0
        if self.kind == 2:
            zech = field.zech_table
            self.zech_t = <int64_t*> malloc(max(1, self.q1) * sizeof(int64_t))
            for i in range(self.q1):
                self.zech_t[i] = zech[i]

    def __dealloc__(self):
        free(self.weights)
        free(self.exp_t)
        free(self.log_t)
        free(self.zech_t)
        free(self.neg_t)

    # -- field arithmetic ---------------------------------------------------
    cdef inline int64_t fadd(self, int64_t a, int64_t b) nogil:
        cdef int64_t s, la, d, z
        if self.kind == 0:
            s = a + b
            if s >= self.p:
                s -= self.p
            return s
        if self.kind == 1:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log_t[a]
        d = self.log_t[b] - la
        if d < 0:
            d += self.q1
        z = self.zech_t[d]
        if z < 0:
            return 0
        s = la + z
        if s >= self.q1:
            s -= self.q1
        return self.exp_t[s]

    cdef inline int64_t fmul(self, int64_t a, int64_t b) nogil:
        if self.kind == 0:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self.exp_t[self.log_t[a] + self.log_t[b]]

    cdef inline int64_t finv(self, int64_t a) nogil:
        cdef int64_t e = self.q1 - self.log_t[a]
        if e >= self.q1:
            e -= self.q1
        return self.exp_t[e]

    # -- conversion -----------------------------------------------------------
    def encode(self, items):
        cdef int m = self.nvars, R = self.nrows, st = self.stride
        cdef Py_ssize_t i, j, r, n
        rows = []
        for exps, c in items:
            if c:
                for a in exps:
                    if a > _MAX_EXP:
                        raise OverflowError(f"exponent {a} exceeds {_MAX_EXP}")
                key = tuple(sum(self.weights[r * m + j] * exps[j] for j in range(m)) for r in range(R))
                rows.append((key, tuple(exps), c))
        rows.sort(reverse=True)
        merged = []
        last = None
        for key, exps, c in rows:
            if last is not None and last[0] == key:
                s = self.fadd(last[2], c)
                if s:
                    last[2] = s
                else:
                    merged.pop()
                    last = merged[len(merged) - 1] if merged else None
            else:
                last = [key, exps, c]
                merged.append(last)
        n = len(merged)
        cdef int64_t* data = _alloc(n, st)
        for i in range(n):
            key, exps, c = merged[i]
            for j in range(m):
                data[i * st + j] = exps[j]
            for r in range(R):
                data[i * st + m + r] = key[r]
            data[i * st + m + R] = c
        return _wrap(data, n, st)

    def decode(self, KPoly f):
        cdef int m = self.nvars, st = self.stride
        cdef Py_ssize_t i, j
        out = []
        for i in range(f.n):
            out.append((tuple(f.data[i * st + j] for j in range(m)), f.data[i * st + st - 1]))
        return out

    def is_zero(self, KPoly f):
        return f.n == 0

    def lead(self, KPoly f):
        if f.n == 0:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return tuple(f.data[j] for j in range(self.nvars))

    def lead_coeff(self, KPoly f):
        return f.data[self.stride - 1]

    def monic(self, KPoly f):
        cdef int st = self.stride
        cdef Py_ssize_t i
        if f.n == 0 or f.data[st - 1] == 1:
            return f
        cdef int64_t inv = self.finv(f.data[st - 1])
        cdef int64_t* data = _alloc(f.n, st)
        memcpy(data, f.data, f.n * st * sizeof(int64_t))
        for i in range(f.n):
            data[i * st + st - 1] = self.fmul(inv, data[i * st + st - 1])
        return _wrap(data, f.n, st)

    # -- kernels ----------------------------------------------------------------
    cdef Py_ssize_t _merge(self, int64_t* out,
                           int64_t* a, Py_ssize_t na,
                           int64_t* b, Py_ssize_t nb,
                           int64_t* bshift, int64_t bfactor) nogil:
        """out = a + bfactor * (x^bshift * b); a terms are copied unchanged."""
        cdef int m = self.nvars, R = self.nrows, st = self.stride
        cdef Py_ssize_t i = 0, j = 0, k = 0, r
        cdef int cmp
        cdef int64_t c, bkey
        cdef int64_t* ta
        cdef int64_t* tb
        cdef int64_t* to
        while i < na and j < nb:
            ta = a + i * st
            tb = b + j * st
            cmp = 0
            for r in range(m, m + R):
                bkey = tb[r] + bshift[r]
                if ta[r] > bkey:
                    cmp = 1
                    break
                if ta[r] < bkey:
                    cmp = -1
                    break
            to = out + k * st
            if cmp > 0:
                memcpy(to, ta, st * sizeof(int64_t))
                i += 1
                k += 1
            elif cmp < 0:
                for r in range(m + R):
                    to[r] = tb[r] + bshift[r]
                to[st - 1] = self.fmul(bfactor, tb[st - 1])
                j += 1
                k += 1
            else:
                c = self.fadd(ta[st - 1], self.fmul(bfactor, tb[st - 1]))
                if c != 0:
                    memcpy(to, ta, (st - 1) * sizeof(int64_t))
                    to[st - 1] = c
                    k += 1
                i += 1
                j += 1
        if i < na:
            memcpy(out + k * st, a + i * st, (na - i) * st * sizeof(int64_t))
            k += na - i
        while j < nb:
            tb = b + j * st
            to = out + k * st
            for r in range(m + R):
                to[r] = tb[r] + bshift[r]
            to[st - 1] = self.fmul(bfactor, tb[st - 1])
            j += 1
            k += 1
        return k

    def spoly(self, KPoly f, KPoly g):
        cdef int m = self.nvars, R = self.nrows, st = self.stride
        cdef Py_ssize_t j
        if f.n == 0 or g.n == 0:
            raise ZeroPolynomial("S-polynomial of a zero polynomial")
        cdef int64_t[64] fshift_buf
        cdef int64_t[64] gshift_buf
        cdef int64_t* fshift = fshift_buf
        cdef int64_t* gshift = gshift_buf
        cdef bint heap_shift = (m + R) > 64
        if heap_shift:
            fshift = <int64_t*> malloc((m + R) * sizeof(int64_t))
            gshift = <int64_t*> malloc((m + R) * sizeof(int64_t))
        cdef int64_t lf, lg, l
        for j in range(m):
            lf = f.data[j]
            lg = g.data[j]
            l = lf if lf > lg else lg
            fshift[j] = l - lf
            gshift[j] = l - lg
        for j in range(m, m + R):
            fshift[j] = 0
            gshift[j] = 0
        cdef Py_ssize_t r
        for r in range(R):
            for j in range(m):
                fshift[m + r] += self.weights[r * m + j] * fshift[j]
                gshift[m + r] += self.weights[r * m + j] * gshift[j]
        cdef int64_t cf = self.finv(f.data[st - 1])
        cdef int64_t cg = self.neg_t[self.finv(g.data[st - 1])]
        # scaled, shifted tail of f into tmp, then merge with g's tail
        cdef Py_ssize_t nf = f.n - 1, ng = g.n - 1
        cdef int64_t* tmp = _alloc(nf, st)
        cdef int64_t* out = _alloc(nf + ng, st)
        cdef Py_ssize_t k = self._merge(tmp, NULL, 0, f.data + st, nf, fshift, cf)
        k = self._merge(out, tmp, k, g.data + st, ng, gshift, cg)
        free(tmp)
        if heap_shift:
            free(fshift)
            free(gshift)
        return _wrap(out, k, st)

    cdef int64_t* _reduce_raw(self, int64_t* fdata, Py_ssize_t fn,
                              int64_t** bdata, Py_ssize_t* blen, int64_t* nlcinv,
                              Py_ssize_t nb, bint full,
                              Py_ssize_t* out_n, Py_ssize_t* out_steps) except NULL:
        """Remainder of the fn terms at fdata; the caller owns the returned array."""
        cdef int m = self.nvars, R = self.nrows, st = self.stride
        cdef Py_ssize_t bi, i, j, r
        cdef int64_t* shift = <int64_t*> malloc((m + R) * sizeof(int64_t))
        cdef Py_ssize_t cap = fn + 16
        cdef int64_t* A = _alloc(cap, st)
        cdef int64_t* B = _alloc(cap, st)
        cdef int64_t* O = _alloc(fn, st)
        cdef int64_t* swap
        cdef int64_t* grown
        cdef Py_ssize_t ocap = fn
        cdef Py_ssize_t na = fn, no = 0, pos = 0, need, steps = 0
        cdef int64_t* t
        cdef int64_t* lead
        cdef bint divisible
        memcpy(A, fdata, fn * st * sizeof(int64_t))
        while pos < na:
            t = A + pos * st
            bi = -1
            for i in range(nb):
                lead = bdata[i]
                divisible = True
                for j in range(m):
                    if lead[j] > t[j]:
                        divisible = False
                        break
                if divisible:
                    bi = i
                    break
            if bi < 0:
                if no + (na - pos) > ocap:
                    ocap = 2 * (no + (na - pos))
                    O = <int64_t*> realloc(O, ocap * st * sizeof(int64_t))
                if full:
                    memcpy(O + no * st, t, st * sizeof(int64_t))
                    no += 1
                    pos += 1
                    continue
                memcpy(O + no * st, t, (na - pos) * st * sizeof(int64_t))
                no += na - pos
                break
            steps += 1
            lead = bdata[bi]
            for r in range(m + R):
                shift[r] = t[r] - lead[r]
            need = (na - pos - 1) + (blen[bi] - 1)
            if need > cap:
                cap = 2 * need
                free(B)
                B = _alloc(cap, st)
                grown = _alloc(cap, st)
                memcpy(grown, A, na * st * sizeof(int64_t))
                free(A)
                A = grown
                t = A + pos * st
            na = self._merge(B, A + (pos + 1) * st, na - pos - 1,
                             lead + st, blen[bi] - 1,
                             shift, self.fmul(t[st - 1], nlcinv[bi]))
            swap = A
            A = B
            B = swap
            pos = 0
        free(A)
        free(B)
        free(shift)
        out_n[0] = no
        out_steps[0] = steps
        return O

    def reduce(self, KPoly f, basis, bint full=True):
        cdef int st = self.stride
        cdef Py_ssize_t nb, bi, no = 0, steps = 0
        if f.n == 0:
            return f, 0
        polys = [g for g in basis if (<KPoly> g).n > 0]
        nb = len(polys)
        cdef int64_t** bdata = <int64_t**> malloc(max(1, nb) * sizeof(int64_t*))
        cdef Py_ssize_t* blen = <Py_ssize_t*> malloc(max(1, nb) * sizeof(Py_ssize_t))
        cdef int64_t* nlcinv = <int64_t*> malloc(max(1, nb) * sizeof(int64_t))
        cdef KPoly g
        for bi in range(nb):
            g = polys[bi]
            bdata[bi] = g.data
            blen[bi] = g.n
            nlcinv[bi] = self.neg_t[self.finv(g.data[st - 1])]
        cdef int64_t* O
        try:
            O = self._reduce_raw(f.data, f.n, bdata, blen, nlcinv, nb, full, &no, &steps)
        finally:
            free(bdata)
            free(blen)
            free(nlcinv)
        return _wrap(O, no, st), steps

    def groebner(self, polys):
        """Minimal Gröbner basis; same pair order and criteria as the Python kernel."""
        cdef int m = self.nvars, st = self.stride
        cdef Py_ssize_t i, j, a, b, c, idx, best, no, steps
        cdef Py_ssize_t bcap = 16, nbasis = 0, nactive = 0
        cdef Py_ssize_t pcap = 64, npairs = 0
        cdef long long spairs = 0, skipped = 0, zeros = 0, steps_total = 0
        basis = []
        cdef int64_t** bptr = <int64_t**> malloc(bcap * sizeof(int64_t*))
        cdef Py_ssize_t* blen = <Py_ssize_t*> malloc(bcap * sizeof(Py_ssize_t))
        cdef int64_t* bnlc = <int64_t*> malloc(bcap * sizeof(int64_t))
        cdef Py_ssize_t* active = <Py_ssize_t*> malloc(bcap * sizeof(Py_ssize_t))
        cdef int64_t** aptr = <int64_t**> malloc(bcap * sizeof(int64_t*))
        cdef Py_ssize_t* alen = <Py_ssize_t*> malloc(bcap * sizeof(Py_ssize_t))
        cdef int64_t* anlc = <int64_t*> malloc(bcap * sizeof(int64_t))
        cdef Py_ssize_t* pi = <Py_ssize_t*> malloc(pcap * sizeof(Py_ssize_t))
        cdef Py_ssize_t* pj = <Py_ssize_t*> malloc(pcap * sizeof(Py_ssize_t))
        cdef int64_t* pdeg = <int64_t*> malloc(pcap * sizeof(int64_t))
        cdef int64_t* plcm = <int64_t*> malloc(pcap * m * sizeof(int64_t))
        cdef int64_t* clcm = NULL
        cdef char* cflag = NULL
        cdef int64_t* O
        cdef int64_t* lh
        cdef int64_t* lg
        cdef int64_t* l1
        cdef int64_t* l2
        cdef int64_t* li
        cdef int64_t* lj
        cdef int64_t x, y, deg
        cdef bint ok, dominated, disjoint
        cdef Py_ssize_t ncand, h, nnew
        cdef KPoly f, r
        try:
            queue = list(polys)
            qpos = 0
            while True:
                # next polynomial to reduce: input generators first, then pairs
                if qpos < len(queue):
                    f = queue[qpos]
                    qpos += 1
                    is_pair = False
                elif npairs > 0:
                    best = 0
                    for idx in range(1, npairs):
                        if (pdeg[idx] < pdeg[best]
                                or (pdeg[idx] == pdeg[best]
                                    and (pj[idx] < pj[best]
                                         or (pj[idx] == pj[best] and pi[idx] < pi[best])))):
                            best = idx
                    i = pi[best]
                    j = pj[best]
                    npairs -= 1
                    pi[best] = pi[npairs]
                    pj[best] = pj[npairs]
                    pdeg[best] = pdeg[npairs]
                    memcpy(plcm + best * m, plcm + npairs * m, m * sizeof(int64_t))
                    spairs += 1
                    f = self.spoly(basis[i], basis[j])
                    is_pair = True
                else:
                    break
                if f.n == 0:
                    if is_pair:
                        zeros += 1
                    continue
                O = self._reduce_raw(f.data, f.n, aptr, alen, anlc, nactive, True, &no, &steps)
                steps_total += steps
                if no == 0:
                    free(O)
                    if is_pair:
                        zeros += 1
                    continue
                r = self.monic(_wrap(O, no, st))
                # install r as basis element h
                h = nbasis
                if nbasis == bcap:
                    bcap *= 2
                    bptr = <int64_t**> realloc(bptr, bcap * sizeof(int64_t*))
                    blen = <Py_ssize_t*> realloc(blen, bcap * sizeof(Py_ssize_t))
                    bnlc = <int64_t*> realloc(bnlc, bcap * sizeof(int64_t))
                    active = <Py_ssize_t*> realloc(active, bcap * sizeof(Py_ssize_t))
                    aptr = <int64_t**> realloc(aptr, bcap * sizeof(int64_t*))
                    alen = <Py_ssize_t*> realloc(alen, bcap * sizeof(Py_ssize_t))
                    anlc = <int64_t*> realloc(anlc, bcap * sizeof(int64_t))
                basis.append(r)
                bptr[h] = r.data
                blen[h] = r.n
                bnlc[h] = self.neg_t[1]
                nbasis += 1
                lh = r.data
                ncand = nactive
                clcm = <int64_t*> realloc(clcm, max(1, ncand) * m * sizeof(int64_t))
                cflag = <char*> realloc(cflag, max(1, ncand))
                for a in range(ncand):
                    lg = bptr[active[a]]
                    disjoint = True
                    for c in range(m):
                        x = lh[c]
                        y = lg[c]
                        clcm[a * m + c] = x if x > y else y
                        if x and y:
                            disjoint = False
                    cflag[a] = 2 if disjoint else 1
                # chain criterion among the new candidates
                for a in range(ncand):
                    if cflag[a] != 1:
                        continue
                    l1 = clcm + a * m
                    dominated = False
                    for b in range(ncand):
                        if b == a or cflag[b] == 0:
                            continue
                        l2 = clcm + b * m
                        ok = True
                        for c in range(m):
                            if l2[c] > l1[c]:
                                ok = False
                                break
                        if ok:
                            dominated = True
                            break
                    if dominated:
                        cflag[a] = 0
                        skipped += 1
                # pairs already queued that h makes redundant
                idx = 0
                while idx < npairs:
                    l1 = plcm + idx * m
                    ok = True
                    for c in range(m):
                        if lh[c] > l1[c]:
                            ok = False
                            break
                    if ok:
                        li = bptr[pi[idx]]
                        lj = bptr[pj[idx]]
                        dominated = False
                        for c in range(m):
                            x = li[c] if li[c] > lh[c] else lh[c]
                            if x != l1[c]:
                                dominated = True
                                break
                        if dominated:
                            for c in range(m):
                                x = lj[c] if lj[c] > lh[c] else lh[c]
                                if x != l1[c]:
                                    break
                            else:
                                dominated = False
                        if dominated:
                            skipped += 1
                            npairs -= 1
                            pi[idx] = pi[npairs]
                            pj[idx] = pj[npairs]
                            pdeg[idx] = pdeg[npairs]
                            memcpy(plcm + idx * m, plcm + npairs * m, m * sizeof(int64_t))
                            continue
                    idx += 1
                for a in range(ncand):
                    if cflag[a] == 2:
                        skipped += 1
                    elif cflag[a] == 1:
                        if npairs == pcap:
                            pcap *= 2
                            pi = <Py_ssize_t*> realloc(pi, pcap * sizeof(Py_ssize_t))
                            pj = <Py_ssize_t*> realloc(pj, pcap * sizeof(Py_ssize_t))
                            pdeg = <int64_t*> realloc(pdeg, pcap * sizeof(int64_t))
                            plcm = <int64_t*> realloc(plcm, pcap * m * sizeof(int64_t))
                        deg = 0
                        for c in range(m):
                            plcm[npairs * m + c] = clcm[a * m + c]
                            deg += clcm[a * m + c]
                        pdeg[npairs] = deg
                        pi[npairs] = active[a]
                        pj[npairs] = h
                        npairs += 1
                # drop active elements whose lead h divides
                b = 0
                for a in range(nactive):
                    lg = bptr[active[a]]
                    ok = True
                    for c in range(m):
                        if lh[c] > lg[c]:
                            ok = False
                            break
                    if not ok:
                        active[b] = active[a]
                        b += 1
                active[b] = h
                nactive = b + 1
                for a in range(nactive):
                    aptr[a] = bptr[active[a]]
                    alen[a] = blen[active[a]]
                    anlc[a] = bnlc[active[a]]
            out = [basis[active[a]] for a in range(nactive)]
        finally:
            free(bptr)
            free(blen)
            free(bnlc)
            free(active)
            free(aptr)
            free(alen)
            free(anlc)
            free(pi)
            free(pj)
            free(pdeg)
            free(plcm)
            free(clcm)
            free(cflag)
        return out, (spairs, skipped, zeros, steps_total)
