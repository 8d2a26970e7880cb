/* Hot loops for the series reconstruction and the divisor-sum fill.
 *
 * Bit i of the little-endian uint64 word stream is the coefficient of z^i.
 * The Python layer owns all buffers; everything here runs with the GIL
 * released and touches nothing but the passed memory.
 */
#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <stdint.h>

/* g ^= g << n, truncated to W words. Descending order keeps it in place. */
static void
update_words(uint64_t *g, Py_ssize_t W, Py_ssize_t n)
{
    Py_ssize_t ws = n >> 6;
    unsigned bs = (unsigned)(n & 63);
    Py_ssize_t j;

    if (bs == 0) {
        for (j = W - 1; j >= ws; j--)
            g[j] ^= g[j - ws];
    } else {
        unsigned inv = 64u - bs;
        for (j = W - 1; j > ws; j--)
            g[j] ^= (g[j - ws] << bs) | (g[j - ws - 1] >> inv);
        g[ws] ^= g[0] << bs;
    }
}

static PyObject *
py_update(PyObject *self, PyObject *args)
{
    Py_buffer gb;
    Py_ssize_t n;

    if (!PyArg_ParseTuple(args, "w*n", &gb, &n))
        return NULL;
    if (gb.len % 8 != 0 || n < 1 || (n >> 6) >= gb.len / 8) {
        PyBuffer_Release(&gb);
        PyErr_SetString(PyExc_ValueError, "bad buffer length or shift");
        return NULL;
    }
    update_words((uint64_t *)gb.buf, gb.len / 8, n);
    PyBuffer_Release(&gb);
    Py_RETURN_NONE;
}

/* Greedy membership scan.  g starts as the constant-one series, t holds
 * the inverse of P modulo z^(X+1).  Whenever bit n of g and t disagree,
 * n joins the set and g picks up the factor 1 + z^n.  Returns the member
 * count; membership bits are written into m.  On return g equals t.
 */
static PyObject *
py_reconstruct(PyObject *self, PyObject *args)
{
    Py_buffer gb, tb, mb;
    unsigned long long Xarg;
    uint64_t *g, *m;
    const uint64_t *t;
    Py_ssize_t W, w, X;
    uint64_t top_keep;
    long long count = 0;

    if (!PyArg_ParseTuple(args, "w*y*w*K", &gb, &tb, &mb, &Xarg))
        return NULL;
    W = gb.len / 8;
    X = (Py_ssize_t)Xarg;
    if (gb.len % 8 != 0 || tb.len != gb.len || mb.len != gb.len ||
        (X >> 6) != W - 1) {
        PyBuffer_Release(&gb);
        PyBuffer_Release(&tb);
        PyBuffer_Release(&mb);
        PyErr_SetString(PyExc_ValueError, "buffer sizes do not match bound");
        return NULL;
    }
    g = (uint64_t *)gb.buf;
    t = (const uint64_t *)tb.buf;
    m = (uint64_t *)mb.buf;
    top_keep = ((X & 63) == 63) ? ~(uint64_t)0
                                : (((uint64_t)1 << ((X & 63) + 1)) - 1);

    Py_BEGIN_ALLOW_THREADS
    for (w = 0; w < W; w++) {
        uint64_t diff = g[w] ^ t[w];
        while (diff) {
            unsigned b = (unsigned)__builtin_ctzll(diff);
            Py_ssize_t n = (w << 6) + b;
            m[w] |= (uint64_t)1 << b;
            count++;
            update_words(g, W, n);
            g[W - 1] &= top_keep;
            /* bit n self-corrects (g[0] has bit 0 set), bits below n
             * in this word are already settled, so just re-read */
            diff = g[w] ^ t[w];
        }
    }
    Py_END_ALLOW_THREADS

    PyBuffer_Release(&gb);
    PyBuffer_Release(&tb);
    PyBuffer_Release(&mb);
    return PyLong_FromLongLong(count);
}

/* s[j] += d for every multiple j of every member d; s has X+1 entries. */
static PyObject *
py_sigma_fill(PyObject *self, PyObject *args)
{
    Py_buffer ab, sb;
    const int64_t *a;
    int64_t *s;
    Py_ssize_t na, X, i;

    if (!PyArg_ParseTuple(args, "y*w*", &ab, &sb))
        return NULL;
    if (ab.len % 8 != 0 || sb.len % 8 != 0 || sb.len < 8) {
        PyBuffer_Release(&ab);
        PyBuffer_Release(&sb);
        PyErr_SetString(PyExc_ValueError, "buffers must hold int64 values");
        return NULL;
    }
    a = (const int64_t *)ab.buf;
    s = (int64_t *)sb.buf;
    na = ab.len / 8;
    X = sb.len / 8 - 1;

    Py_BEGIN_ALLOW_THREADS
    for (i = 0; i < na; i++) {
        int64_t d = a[i];
        int64_t j;
        if (d < 1)
            continue;
        for (j = d; j <= X; j += d)
            s[j] += d;
    }
    Py_END_ALLOW_THREADS

    PyBuffer_Release(&ab);
    PyBuffer_Release(&sb);
    Py_RETURN_NONE;
}

static PyMethodDef methods[] = {
    {"update", py_update, METH_VARARGS,
     "update(g, n): g ^= g << n over 64-bit words, truncated."},
    {"reconstruct", py_reconstruct, METH_VARARGS,
     "reconstruct(g, t, m, X) -> count: greedy membership scan."},
    {"sigma_fill", py_sigma_fill, METH_VARARGS,
     "sigma_fill(members, s): divisor-sum accumulation into s."},
    {NULL, NULL, 0, NULL}};

static struct PyModuleDef moduledef = {
    PyModuleDef_HEAD_INIT, "_seriescore", NULL, -1, methods,
};

PyMODINIT_FUNC
PyInit__seriescore(void)
{
    return PyModule_Create(&moduledef);
}
