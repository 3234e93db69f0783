# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two partition enumerators.

A direct transliteration of the pure-Python engines in
`indmatch.enumerate` onto flat C arrays: same adjacency construction,
same degree-bucket tie-breaking, same classification and removal order,
so both backends produce identical solution streams and identical
instrumentation counters.  Structural assertion checks stay in the
Python engine; this module only enumerates and counts.

Entry point: `run(n, eu, ev, alive_mask, algo, cutoff, emit) -> dict`.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset


cdef class _Run:
    cdef int n, m, cap
    cdef int *eu
    cdef int *ev
    cdef int *head
    cdef int *nxt
    cdef int *prv
    cdef char *alive
    cdef int *deg
    # degree buckets
    cdef int *bhead
    cdef int *btail
    cdef int *bnxt
    cdef int *bprv
    cdef int *bucket
    cdef int maxb
    # undo log (edge removals only)
    cdef int *ulog
    cdef int ulen
    cdef long long live
    # classification scratch, reset or epoch-guarded between iterations
    cdef int *vmark
    cdef int *vdist
    cdef int *emark
    cdef int epoch
    cdef int *lvl1
    cdef int *lvl2
    cdef int *t01
    cdef int *t11
    cdef int *t12
    cdef int *td2
    cdef int *pcnt
    cdef int *poff
    cdef int *pcur
    cdef int *ppar
    cdef int *pbuf_u
    cdef int *pbuf_f
    cdef int *anchors
    cdef int *sbuf_u
    cdef int *sbuf_f
    cdef size_t scap
    cdef int *scnt
    cdef int *utoslot
    cdef size_t *jcur
    # general-engine static adjacency (CSR over the edges alive at entry)
    cdef int *soffs
    cdef int *sedge
    cdef int *sother
    cdef int *gvmark
    cdef int *gemark
    cdef int gepoch
    cdef int *vertbuf
    cdef int *confbuf
    # current matching and per-iteration frame storage
    cdef int *mstack
    cdef int msize
    cdef int *arena
    cdef size_t acap
    cdef size_t atop
    # counters / control
    cdef public long long solutions, iterations, internal, deletions, restorations
    cdef public long long sect_sum_total, d2_total
    cdef public int max_depth
    cdef int depth
    cdef long long cutoff
    cdef bint stopped
    cdef object emit

    def __cinit__(self, int n, list eu, list ev, bytes alive_mask,
                  long long cutoff, object emit):
        cdef int i, e, u, v
        self.n = n
        self.m = len(eu)
        self.emit = emit
        self.cutoff = cutoff
        self.stopped = False
        self.depth = 0
        self.max_depth = 0
        self.solutions = 0
        self.iterations = 0
        self.internal = 0
        self.deletions = 0
        self.restorations = 0
        self.sect_sum_total = 0
        self.d2_total = 0
        cdef int m = self.m
        self.eu = <int *> malloc(sizeof(int) * (m + 1))
        self.ev = <int *> malloc(sizeof(int) * (m + 1))
        self.alive = <char *> malloc(m + 1)
        for i in range(m):
            self.eu[i] = eu[i]
            self.ev[i] = ev[i]
            self.alive[i] = 1 if alive_mask[i] else 0
        # dynamic adjacency: edge e owns arcs 2e (at eu) and 2e+1 (at ev),
        # head-inserted in ascending edge order over the alive edges
        self.head = <int *> malloc(sizeof(int) * (n + 1))
        self.nxt = <int *> malloc(sizeof(int) * (2 * m + 1))
        self.prv = <int *> malloc(sizeof(int) * (2 * m + 1))
        self.deg = <int *> malloc(sizeof(int) * (n + 1))
        for i in range(n):
            self.head[i] = -1
            self.deg[i] = 0
        self.live = 0
        for e in range(m):
            if not self.alive[e]:
                continue
            self.live += 1
            u = self.eu[e]
            v = self.ev[e]
            self._link_front(2 * e, u)
            self._link_front(2 * e + 1, v)
            self.deg[u] += 1
            self.deg[v] += 1
        self.cap = 0
        for i in range(n):
            if self.deg[i] > self.cap:
                self.cap = self.deg[i]
        # degree buckets; vertices inserted at the tail in id order, so
        # pivot ties break toward the most recently inserted vertex
        self.bhead = <int *> malloc(sizeof(int) * (self.cap + 1))
        self.btail = <int *> malloc(sizeof(int) * (self.cap + 1))
        self.bnxt = <int *> malloc(sizeof(int) * (n + 1))
        self.bprv = <int *> malloc(sizeof(int) * (n + 1))
        self.bucket = <int *> malloc(sizeof(int) * (n + 1))
        for i in range(self.cap + 1):
            self.bhead[i] = -1
            self.btail[i] = -1
        self.maxb = -1
        for i in range(n):
            self._binsert(i, self.deg[i])
        self.ulog = <int *> malloc(sizeof(int) * (m + 1))
        self.ulen = 0
        self.vmark = <int *> malloc(sizeof(int) * (n + 1))
        self.vdist = <int *> malloc(sizeof(int) * (n + 1))
        self.emark = <int *> malloc(sizeof(int) * (m + 1))
        memset(self.vmark, 0, sizeof(int) * (n + 1))
        memset(self.emark, 0, sizeof(int) * (m + 1))
        self.epoch = 0
        self.lvl1 = <int *> malloc(sizeof(int) * (n + 1))
        self.lvl2 = <int *> malloc(sizeof(int) * (n + 1))
        self.t01 = <int *> malloc(sizeof(int) * (m + 1))
        self.t11 = <int *> malloc(sizeof(int) * (m + 1))
        self.t12 = <int *> malloc(sizeof(int) * (m + 1))
        self.td2 = <int *> malloc(sizeof(int) * (m + 1))
        self.pcnt = <int *> malloc(sizeof(int) * (n + 1))
        self.poff = <int *> malloc(sizeof(int) * (n + 1))
        self.pcur = <int *> malloc(sizeof(int) * (n + 1))
        # one parent pair per 1-2 edge, so m is a hard bound
        self.ppar = <int *> malloc(sizeof(int) * (m + 1))
        self.pbuf_u = <int *> malloc(sizeof(int) * (m + 1))
        self.pbuf_f = <int *> malloc(sizeof(int) * (m + 1))
        memset(self.pcnt, 0, sizeof(int) * (n + 1))
        self.anchors = <int *> malloc(sizeof(int) * (2 * self.cap + 4))
        self.scap = 256
        self.sbuf_u = <int *> malloc(sizeof(int) * self.scap)
        self.sbuf_f = <int *> malloc(sizeof(int) * self.scap)
        self.scnt = <int *> malloc(sizeof(int) * (n + 1))
        memset(self.scnt, 0, sizeof(int) * (n + 1))
        self.utoslot = <int *> malloc(sizeof(int) * (n + 1))
        self.jcur = <size_t *> malloc(sizeof(size_t) * (n + 1))
        self.soffs = NULL
        self.sedge = NULL
        self.sother = NULL
        self.gvmark = NULL
        self.gemark = NULL
        self.gepoch = 0
        self.vertbuf = NULL
        self.confbuf = NULL
        self.mstack = <int *> malloc(sizeof(int) * (m + 1))
        self.msize = 0
        self.acap = 4096
        self.arena = <int *> malloc(sizeof(int) * self.acap)
        self.atop = 0

    def __dealloc__(self):
        free(self.eu); free(self.ev); free(self.alive)
        free(self.head); free(self.nxt); free(self.prv); free(self.deg)
        free(self.bhead); free(self.btail); free(self.bnxt); free(self.bprv)
        free(self.bucket); free(self.ulog)
        free(self.vmark); free(self.vdist); free(self.emark)
        free(self.lvl1); free(self.lvl2)
        free(self.t01); free(self.t11); free(self.t12); free(self.td2)
        free(self.pcnt); free(self.poff); free(self.pcur); free(self.ppar)
        free(self.pbuf_u); free(self.pbuf_f); free(self.anchors)
        free(self.sbuf_u); free(self.sbuf_f); free(self.scnt)
        free(self.utoslot); free(self.jcur)
        if self.soffs != NULL: free(self.soffs)
        if self.sedge != NULL: free(self.sedge)
        if self.sother != NULL: free(self.sother)
        if self.gvmark != NULL: free(self.gvmark)
        if self.gemark != NULL: free(self.gemark)
        if self.vertbuf != NULL: free(self.vertbuf)
        if self.confbuf != NULL: free(self.confbuf)
        free(self.mstack); free(self.arena)

    # -- dynamic adjacency --------------------------------------------

    cdef inline void _link_front(self, int arc, int v) nogil:
        cdef int h = self.head[v]
        self.nxt[arc] = h
        self.prv[arc] = -(v + 1)
        if h != -1:
            self.prv[h] = arc
        self.head[v] = arc

    cdef inline void _remove_edge(self, int e) nogil:
        cdef int arc, p, nn, u, v, du, dv
        for arc in range(2 * e, 2 * e + 2):
            p = self.prv[arc]
            nn = self.nxt[arc]
            if p < 0:
                self.head[-p - 1] = nn
            else:
                self.nxt[p] = nn
            if nn != -1:
                self.prv[nn] = p
        self.alive[e] = 0
        self.live -= 1
        u = self.eu[e]
        v = self.ev[e]
        du = self.deg[u]
        dv = self.deg[v]
        self.deg[u] = du - 1
        self.deg[v] = dv - 1
        self._bmove(u, du, du - 1)
        self._bmove(v, dv, dv - 1)
        self.ulog[self.ulen] = e
        self.ulen += 1
        self.deletions += 1

    cdef inline void _relink_edge(self, int e) nogil:
        # relink in reverse arc order so both endpoints' lists come back
        # to exactly their pre-removal shape
        cdef int arc, p, nn, u, v, du, dv
        arc = 2 * e + 1
        while arc >= 2 * e:
            p = self.prv[arc]
            nn = self.nxt[arc]
            if p < 0:
                self.head[-p - 1] = arc
            else:
                self.nxt[p] = arc
            if nn != -1:
                self.prv[nn] = arc
            arc -= 1
        self.alive[e] = 1
        self.live += 1
        u = self.eu[e]
        v = self.ev[e]
        du = self.deg[u]
        dv = self.deg[v]
        self.deg[u] = du + 1
        self.deg[v] = dv + 1
        self._bmove(u, du, du + 1)
        self._bmove(v, dv, dv + 1)

    cdef inline void _rollback(self, int mark) nogil:
        while self.ulen > mark:
            self.ulen -= 1
            self._relink_edge(self.ulog[self.ulen])
            self.restorations += 1

    # -- degree buckets -----------------------------------------------

    cdef inline void _binsert(self, int v, int d) nogil:
        cdef int t = self.btail[d]
        self.bprv[v] = t
        self.bnxt[v] = -1
        if t == -1:
            self.bhead[d] = v
        else:
            self.bnxt[t] = v
        self.btail[d] = v
        self.bucket[v] = d
        if d > self.maxb:
            self.maxb = d

    cdef inline void _bmove(self, int v, int old, int new) nogil:
        cdef int d = self.bucket[v]
        cdef int p = self.bprv[v]
        cdef int nn = self.bnxt[v]
        if p == -1:
            self.bhead[d] = nn
        else:
            self.bnxt[p] = nn
        if nn == -1:
            self.btail[d] = p
        else:
            self.bprv[nn] = p
        # scan for a new maximum only on a decrease; an increase
        # re-raises the maximum in the insert below
        if new < old and d == self.maxb and self.bhead[d] == -1:
            while self.maxb >= 0 and self.bhead[self.maxb] == -1:
                self.maxb -= 1
        self._binsert(v, new)

    # -- growable buffers ---------------------------------------------

    cdef size_t _arena_reserve(self, size_t need) except *:
        cdef size_t base = self.atop
        cdef int *p
        while self.atop + need > self.acap:
            self.acap *= 2
            p = <int *> realloc(self.arena, sizeof(int) * self.acap)
            if p == NULL:
                raise MemoryError()
            self.arena = p
        self.atop += need
        return base

    cdef void _sbuf_reserve(self, size_t need) except *:
        cdef int *p
        while need > self.scap:
            self.scap *= 2
            p = <int *> realloc(self.sbuf_u, sizeof(int) * self.scap)
            if p == NULL:
                raise MemoryError()
            self.sbuf_u = p
            p = <int *> realloc(self.sbuf_f, sizeof(int) * self.scap)
            if p == NULL:
                raise MemoryError()
            self.sbuf_f = p

    # -- emission -----------------------------------------------------

    cdef int _emit(self) except -1:
        self.solutions += 1
        cdef int i
        if self.emit is not None:
            sol = tuple([self.mstack[i] for i in range(self.msize)])
            if self.emit(sol) is False:
                self.stopped = True
        if self.cutoff > 0 and self.solutions >= self.cutoff:
            self.stopped = True
        return 0

    # -- C4-free multi-way engine -------------------------------------

    cdef int rec_c4free(self) except -1:
        self.iterations += 1
        if self.depth > self.max_depth:
            self.max_depth = self.depth
        if self.live == 0:
            self._emit()
            return 0
        self.internal += 1
        cdef int v = self.btail[self.maxb]
        cdef int *eu = self.eu
        cdef int *ev = self.ev
        cdef int ep, a, e, u, w, x, p, f, i, j, k, t, na, dup, cnt, mm0, mi
        cdef int nd01 = 0, nd11 = 0, nd12 = 0, nd2 = 0
        cdef int nl1 = 0, nl2 = 0, npp = 0, nsb = 0

        self.epoch += 1
        ep = self.epoch
        self.vmark[v] = ep
        self.vdist[v] = 0

        # pivot star: the 0-1 edges and the distance-1 ring
        a = self.head[v]
        while a != -1:
            e = a >> 1
            u = ev[e] if (a & 1) == 0 else eu[e]
            self.t01[nd01] = e
            nd01 += 1
            self.emark[e] = ep
            if self.vmark[u] != ep:
                self.vmark[u] = ep
                self.vdist[u] = 1
                self.lvl1[nl1] = u
                nl1 += 1
            a = self.nxt[a]

        # child order is ascending 0-1 edge id
        for i in range(1, nd01):
            e = self.t01[i]
            j = i
            while j > 0 and self.t01[j - 1] > e:
                self.t01[j] = self.t01[j - 1]
                j -= 1
            self.t01[j] = e

        # edges leaving the distance-1 ring: 1-1 and 1-2, plus the
        # parent (anchor) of each distance-2 vertex per 1-2 edge
        for i in range(nl1):
            u = self.lvl1[i]
            a = self.head[u]
            while a != -1:
                e = a >> 1
                if self.emark[e] != ep:
                    self.emark[e] = ep
                    w = ev[e] if (a & 1) == 0 else eu[e]
                    if self.vmark[w] == ep:
                        if self.vdist[w] == 1:
                            self.t11[nd11] = e
                            nd11 += 1
                        else:
                            self.t12[nd12] = e
                            nd12 += 1
                            self.pbuf_u[npp] = w
                            self.pbuf_f[npp] = u
                            npp += 1
                            self.pcnt[w] += 1
                    else:
                        self.vmark[w] = ep
                        self.vdist[w] = 2
                        self.lvl2[nl2] = w
                        nl2 += 1
                        self.t12[nd12] = e
                        nd12 += 1
                        self.pbuf_u[npp] = w
                        self.pbuf_f[npp] = u
                        npp += 1
                        self.pcnt[w] = 1
                a = self.nxt[a]

        # everything unmarked at the distance-2 ring is a d2 edge
        for i in range(nl2):
            x = self.lvl2[i]
            a = self.head[x]
            while a != -1:
                e = a >> 1
                if self.emark[e] != ep:
                    self.emark[e] = ep
                    self.td2[nd2] = e
                    nd2 += 1
                a = self.nxt[a]

        # group the parent pairs per distance-2 vertex (stable)
        k = 0
        for i in range(nl2):
            x = self.lvl2[i]
            self.poff[x] = k
            self.pcur[x] = k
            k += self.pcnt[x]
        for i in range(npp):
            x = self.pbuf_u[i]
            self.ppar[self.pcur[x]] = self.pbuf_f[i]
            self.pcur[x] += 1

        # sector pairs (anchor vertex, d2 edge) in d2 order, anchors
        # deduplicated per edge
        for i in range(nd2):
            f = self.td2[i]
            na = 0
            for k in range(2):
                x = eu[f] if k == 0 else ev[f]
                if self.vmark[x] == ep and self.vdist[x] == 2:
                    for j in range(self.poff[x], self.poff[x] + self.pcnt[x]):
                        p = self.ppar[j]
                        dup = 0
                        for t in range(na):
                            if self.anchors[t] == p:
                                dup = 1
                                break
                        if not dup:
                            self.anchors[na] = p
                            na += 1
            self._sbuf_reserve(nsb + na)
            for t in range(na):
                p = self.anchors[t]
                self.sbuf_u[nsb] = p
                self.sbuf_f[nsb] = f
                nsb += 1
                self.scnt[p] += 1

        self.sect_sum_total += nsb
        self.d2_total += nd2

        # frame: [nd01 nd11 nd12][d01 sorted][d11][d12][cnt sect...]*nd01
        cdef size_t need = 3 + 2 * <size_t> nd01 + nd11 + nd12 + nsb
        cdef size_t frame = self._arena_reserve(need)
        cdef size_t off = frame
        self.arena[off] = nd01
        self.arena[off + 1] = nd11
        self.arena[off + 2] = nd12
        off = frame + 3
        for i in range(nd01):
            self.arena[off + i] = self.t01[i]
        off += nd01
        for i in range(nd11):
            self.arena[off + i] = self.t11[i]
        off += nd11
        for i in range(nd12):
            self.arena[off + i] = self.t12[i]
        off += nd12
        for j in range(nd01):
            e = self.arena[frame + 3 + j]
            u = ev[e] if eu[e] == v else eu[e]
            self.utoslot[u] = j
            self.arena[off] = self.scnt[u]
            self.jcur[j] = off + 1
            off += 1 + self.scnt[u]
        for i in range(nsb):
            j = self.utoslot[self.sbuf_u[i]]
            self.arena[self.jcur[j]] = self.sbuf_f[i]
            self.jcur[j] += 1

        # reset the counting scratch before anything can reuse it
        for i in range(nl2):
            self.pcnt[self.lvl2[i]] = 0
        for i in range(nsb):
            self.scnt[self.sbuf_u[i]] = 0

        # 0-child: pivot star removed, pivot isolated
        mm0 = self.ulen
        for i in range(nd01):
            self._remove_edge(self.arena[frame + 3 + i])
        self.depth += 1
        self.rec_c4free()
        self.depth -= 1
        if self.stopped:
            self._rollback(mm0)
            self.atop = frame
            return 0

        # type-1 children: one per 0-1 edge, in sorted order
        off = frame + 3 + nd01
        for i in range(nd11 + nd12):
            self._remove_edge(self.arena[off + i])
        cdef size_t sect_off = frame + 3 + nd01 + nd11 + nd12
        for j in range(nd01):
            e = self.arena[frame + 3 + j]
            cnt = self.arena[sect_off]
            mi = self.ulen
            for i in range(cnt):
                self._remove_edge(self.arena[sect_off + 1 + i])
            self.mstack[self.msize] = e
            self.msize += 1
            self.depth += 1
            self.rec_c4free()
            self.depth -= 1
            self.msize -= 1
            self._rollback(mi)
            if self.stopped:
                break
            sect_off += 1 + cnt
        self._rollback(mm0)
        self.atop = frame
        return 0

    # -- general binary engine ----------------------------------------

    cdef void _build_static(self) except *:
        # CSR over the edges alive at entry, per-vertex in ascending
        # edge id; must run before any mutation
        cdef int n = self.n
        cdef int m = self.m
        cdef int e, u, v, i
        self.soffs = <int *> malloc(sizeof(int) * (n + 2))
        self.sedge = <int *> malloc(sizeof(int) * (2 * m + 1))
        self.sother = <int *> malloc(sizeof(int) * (2 * m + 1))
        self.soffs[0] = 0
        for i in range(n):
            self.soffs[i + 1] = self.soffs[i] + self.deg[i]
            self.pcur[i] = self.soffs[i]
        for e in range(m):
            if not self.alive[e]:
                continue
            u = self.eu[e]
            v = self.ev[e]
            self.sedge[self.pcur[u]] = e
            self.sother[self.pcur[u]] = v
            self.pcur[u] += 1
            self.sedge[self.pcur[v]] = e
            self.sother[self.pcur[v]] = u
            self.pcur[v] += 1
        self.gvmark = <int *> malloc(sizeof(int) * (n + 1))
        self.gemark = <int *> malloc(sizeof(int) * (m + 1))
        memset(self.gvmark, 0, sizeof(int) * (n + 1))
        memset(self.gemark, 0, sizeof(int) * (m + 1))
        self.gepoch = 0
        self.vertbuf = <int *> malloc(sizeof(int) * (n + 1))
        self.confbuf = <int *> malloc(sizeof(int) * (m + 1))

    cdef int _gather_conflicts(self, int e) nogil:
        # live edges within distance 1 of e, distances in the static
        # (entry) adjacency; same visit order as the Python engine
        self.gepoch += 1
        cdef int ep = self.gepoch
        cdef int aa = self.eu[e]
        cdef int bb = self.ev[e]
        cdef int nv = 0, nout = 0
        cdef int k, x, i, w, eid
        for k in range(2):
            x = aa if k == 0 else bb
            if self.gvmark[x] != ep:
                self.gvmark[x] = ep
                self.vertbuf[nv] = x
                nv += 1
        for k in range(2):
            x = aa if k == 0 else bb
            for i in range(self.soffs[x], self.soffs[x + 1]):
                w = self.sother[i]
                if self.gvmark[w] != ep:
                    self.gvmark[w] = ep
                    self.vertbuf[nv] = w
                    nv += 1
        for k in range(nv):
            x = self.vertbuf[k]
            for i in range(self.soffs[x], self.soffs[x + 1]):
                eid = self.sedge[i]
                if self.gemark[eid] != ep and self.alive[eid]:
                    self.gemark[eid] = ep
                    self.confbuf[nout] = eid
                    nout += 1
        return nout

    cdef int rec_general(self) except -1:
        self.iterations += 1
        if self.depth > self.max_depth:
            self.max_depth = self.depth
        if self.live == 0:
            self._emit()
            return 0
        self.internal += 1
        cdef int v = self.btail[self.maxb]
        cdef int a = self.head[v]
        cdef int e = -1
        while a != -1:
            if e < 0 or (a >> 1) < e:
                e = a >> 1
            a = self.nxt[a]
        cdef int mm0 = self.ulen
        self._remove_edge(e)
        self.depth += 1
        self.rec_general()
        self.depth -= 1
        self._rollback(mm0)
        if self.stopped:
            return 0
        cdef int m1 = self.ulen
        cdef int nc = self._gather_conflicts(e)
        cdef int i
        for i in range(nc):
            self._remove_edge(self.confbuf[i])
        self.mstack[self.msize] = e
        self.msize += 1
        self.depth += 1
        self.rec_general()
        self.depth -= 1
        self.msize -= 1
        self._rollback(m1)
        return 0


def run(int n, list eu, list ev, bytes alive_mask, str algo,
        long long cutoff, object emit):
    """Enumerate induced matchings of the graph given as edge arrays.

    `alive_mask[e]` selects the edges present at entry; `algo` is
    "c4free" or "general"; `cutoff` stops after that many solutions
    (0 = unlimited); `emit`, when not None, receives each solution as a
    tuple of edge ids and may return False to stop.  Returns the
    instrumentation counters as a dict.
    """
    if len(ev) != len(eu) or len(alive_mask) != len(eu):
        raise ValueError("eu, ev and alive_mask must have equal length")
    cdef _Run r = _Run(n, eu, ev, alive_mask, cutoff, emit)
    if algo == "c4free":
        r.rec_c4free()
    elif algo == "general":
        r._build_static()
        r.rec_general()
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return {
        "solutions": r.solutions,
        "iterations": r.iterations,
        "internal_iterations": r.internal,
        "max_depth": r.max_depth,
        "deletions": r.deletions,
        "restorations": r.restorations,
        "sect_sum_total": r.sect_sum_total,
        "d2_total": r.d2_total,
    }
