# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled stepping kernel: same contract as ``_pykernel.run`` on int64.

Every multiply and add is overflow-checked; on overflow the kernel raises
``OverflowError`` and the dispatcher reruns the call on Python integers.
Arguments that do not fit in int64 raise ``OverflowError`` at conversion.
"""

cdef extern from *:
    bint mul_ovf "__builtin_mul_overflow"(long long a, long long b, long long *res) nogil
    bint add_ovf "__builtin_add_overflow"(long long a, long long b, long long *res) nogil


cdef inline long long cmul(long long a, long long b) except? -1:
    cdef long long r
    if mul_ovf(a, b, &r):
        raise OverflowError("int64 multiply overflow in stepping kernel")
    return r


cdef inline long long cadd(long long a, long long b) except? -1:
    cdef long long r
    if add_ovf(a, b, &r):
        raise OverflowError("int64 add overflow in stepping kernel")
    return r


def run(long long x0, long long y0, long long dx, long long dy,
        long long w, long long h, long max_steps):
    cdef long long x = x0, y = y0, dx0 = dx, dy0 = dy
    cdef long long adx, ady, ax, ay, lhs, rhs, num, xc, yc
    cdef int side, corner
    cdef long step
    cdef list events = []
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    adx = dx if dx >= 0 else -dx
    ady = dy if dy >= 0 else -dy
    for step in range(max_steps):
        if dx > 0:
            ax = w - x
        elif dx < 0:
            ax = x
        else:
            ax = -1
        if dy > 0:
            ay = h - y
        elif dy < 0:
            ay = y
        else:
            ay = -1
        if ax >= 0 and ay >= 0:
            lhs = cmul(ax, ady)
            rhs = cmul(ay, adx)
        elif ax >= 0:
            lhs = 0
            rhs = 1
        else:
            lhs = 1
            rhs = 0
        if lhs == rhs:
            xc = w if dx > 0 else 0
            yc = h if dy > 0 else 0
            if yc == 0:
                corner = 0 if xc == 0 else 1
            else:
                corner = 2 if xc != 0 else 3
            return 1, corner, events
        if lhs < rhs:
            num = cmul(ax, dy)
            if num % adx != 0:
                raise ArithmeticError("collision off the integer grid")
            y = cadd(y, num // adx)
            if dx > 0:
                x = w
                side = 1
            else:
                x = 0
                side = 3
            dx = -dx
        else:
            num = cmul(ay, dx)
            if num % ady != 0:
                raise ArithmeticError("collision off the integer grid")
            x = cadd(x, num // ady)
            if dy > 0:
                y = h
                side = 2
            else:
                y = 0
                side = 0
            dy = -dy
        events.append(side)
        events.append(x)
        events.append(y)
        if x == x0 and y == y0 and dx == dx0 and dy == dy0:
            return 0, -1, events
    return 2, -1, events
