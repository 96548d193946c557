# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled homomorphism search; see ``_kernel_py`` for the contract."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 _apply(i64[:] ops, i64 start, i64 end, i64 x,
                       i64[:, :] face, i64[:, :] degen) nogil:
    cdef i64 p, c
    for p in range(start, end):
        c = ops[p]
        if c >= 0:
            x = face[x, c]
        else:
            x = degen[x, -c - 1]
        if x < 0:
            return -1
    return x


def search(face_in, degen_in, Py_ssize_t nvars, lo_in, hi_in, dom_ptr_in, dom_vals_in,
           mask_in, mask_row_in, det_in, cons_ptr_in, cons_other_in, opv_s_in, opv_e_in,
           opu_s_in, opu_e_in, ops_in, cof_ptr_in, cof_vals_in, via_in, bint injective, long limit):
    cdef i64[:, :] face = np.ascontiguousarray(face_in, dtype=np.int64)
    cdef i64[:, :] degen = np.ascontiguousarray(degen_in, dtype=np.int64)
    cdef i64[:] lo = np.ascontiguousarray(lo_in, dtype=np.int64)
    cdef i64[:] hi = np.ascontiguousarray(hi_in, dtype=np.int64)
    cdef i64[:] dom_ptr = np.ascontiguousarray(dom_ptr_in, dtype=np.int64)
    cdef i64[:] dom_vals = np.ascontiguousarray(dom_vals_in, dtype=np.int64)
    cdef cnp.uint8_t[:, :] mask = np.ascontiguousarray(mask_in, dtype=np.uint8)
    cdef i64[:] mask_row = np.ascontiguousarray(mask_row_in, dtype=np.int64)
    cdef i64[:] det = np.ascontiguousarray(det_in, dtype=np.int64)
    cdef i64[:] cons_ptr = np.ascontiguousarray(cons_ptr_in, dtype=np.int64)
    cdef i64[:] cons_other = np.ascontiguousarray(cons_other_in, dtype=np.int64)
    cdef i64[:] opv_s = np.ascontiguousarray(opv_s_in, dtype=np.int64)
    cdef i64[:] opv_e = np.ascontiguousarray(opv_e_in, dtype=np.int64)
    cdef i64[:] opu_s = np.ascontiguousarray(opu_s_in, dtype=np.int64)
    cdef i64[:] opu_e = np.ascontiguousarray(opu_e_in, dtype=np.int64)
    cdef i64[:] ops = np.ascontiguousarray(ops_in, dtype=np.int64)
    cdef i64[:, :] cof_ptr = np.ascontiguousarray(cof_ptr_in, dtype=np.int64)
    cdef i64[:, :] cof_vals = np.ascontiguousarray(cof_vals_in, dtype=np.int64)
    cdef i64[:] via = np.ascontiguousarray(via_in, dtype=np.int64)

    if nvars == 0:
        return np.zeros((1, 0), dtype=np.int64)
    cdef Py_ssize_t cap = 64, count = 0, q
    buf = np.empty((cap, nvars), dtype=np.int64)
    cdef i64[:, :] out = buf
    cdef i64 total = face.shape[0]
    cdef cnp.uint8_t[:] used = np.zeros(total + 1, dtype=np.uint8)
    cdef i64[:] img = np.full(nvars, -1, dtype=np.int64)
    cdef i64[:] pos = np.zeros(nvars, dtype=np.int64)
    cdef Py_ssize_t v = 0
    cdef i64 found, d, c, a, b, k, p, start, end, vk, x, fi
    cdef bint ok, explicit, indexed
    while v >= 0:
        if v == nvars:
            if count == cap:
                cap *= 2
                grown = np.empty((cap, nvars), dtype=np.int64)
                grown[:count] = buf[:count]
                buf = grown
                out = buf
            for q in range(nvars):
                out[count, q] = img[q]
            count += 1
            if limit >= 0 and count >= limit:
                break
            v -= 1
            continue
        if img[v] >= 0:
            if injective:
                used[img[v]] = 0
            img[v] = -1
        found = -1
        d = det[v]
        if d >= 0:
            if pos[v] == 0:
                pos[v] = 1
                c = _apply(ops, opu_s[d], opu_e[d], img[cons_other[d]], face, degen)
                ok = c >= 0
                if ok:
                    if mask_row[v] >= 0:
                        ok = mask[mask_row[v], c] != 0
                    else:
                        ok = lo[v] <= c < hi[v]
                if ok and injective and used[c]:
                    ok = False
                if ok:
                    for k in range(cons_ptr[v], cons_ptr[v + 1]):
                        if k == d:
                            continue
                        a = _apply(ops, opv_s[k], opv_e[k], c, face, degen)
                        b = _apply(ops, opu_s[k], opu_e[k], img[cons_other[k]], face, degen)
                        if a != b or a < 0:
                            ok = False
                            break
                if ok:
                    found = c
        else:
            explicit = mask_row[v] >= 0
            vk = via[v]
            indexed = vk >= 0
            fi = 0
            if indexed:
                x = _apply(ops, opu_s[vk], opu_e[vk], img[cons_other[vk]], face, degen)
                fi = ops[opv_s[vk]]
                if x >= 0:
                    start = cof_ptr[fi, x]
                    end = cof_ptr[fi, x + 1]
                else:
                    start = 0
                    end = 0
            elif explicit:
                start = dom_ptr[v]
                end = dom_ptr[v + 1]
            else:
                start = lo[v]
                end = hi[v]
            p = start + pos[v]
            while p < end:
                if indexed:
                    c = cof_vals[fi, p]
                    p += 1
                    if c < lo[v] or c >= hi[v]:
                        continue
                    if explicit and mask[mask_row[v], c] == 0:
                        continue
                elif explicit:
                    c = dom_vals[p]
                    p += 1
                else:
                    c = p
                    p += 1
                if injective and used[c]:
                    continue
                ok = True
                for k in range(cons_ptr[v], cons_ptr[v + 1]):
                    a = _apply(ops, opv_s[k], opv_e[k], c, face, degen)
                    b = _apply(ops, opu_s[k], opu_e[k], img[cons_other[k]], face, degen)
                    if a != b or a < 0:
                        ok = False
                        break
                if ok:
                    found = c
                    break
            pos[v] = p - start
        if found >= 0:
            img[v] = found
            if injective:
                used[found] = 1
            v += 1
            if v < nvars:
                pos[v] = 0
        else:
            pos[v] = 0
            v -= 1
    return buf[:count]
