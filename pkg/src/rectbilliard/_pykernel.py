"""Pure-Python stepping kernel (arbitrary-precision integers).

Works on an integer-scaled table ``[0, w] x [0, h]``; the caller picks the
scale so every collision lands on an integer point. Returns

    (status, vertex, events)

with ``status`` 0 = closed (state recurred), 1 = hit a vertex, 2 = truncated;
``vertex`` the corner code when status is 1 (else -1); ``events`` a flat
list ``[side, x, y, side, x, y, ...]``. Side codes 0..3 are AB, BC, CD, DA
and corner codes 0..3 are A, B, C, D.
"""

CLOSED, VERTEX, TRUNCATED = 0, 1, 2


def run(x0, y0, dx, dy, w, h, max_steps):
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    x, y = x0, y0
    dx0, dy0 = dx, dy
    events = []
    adx, ady = abs(dx), abs(dy)
    for _ in range(max_steps):
        ax = (w - x if dx > 0 else x) if dx else -1
        ay = (h - y if dy > 0 else y) if dy else -1
        if ax >= 0 and ay >= 0:
            lhs, rhs = ax * ady, ay * adx
        elif ax >= 0:
            lhs, rhs = 0, 1
        else:
            lhs, rhs = 1, 0
        if lhs == rhs:
            xc = w if dx > 0 else 0
            yc = h if dy > 0 else 0
            corner = (0 if xc == 0 else 1) if yc == 0 else (2 if xc else 3)
            return VERTEX, corner, events
        if lhs < rhs:
            num = ax * dy
            if num % adx:
                raise ArithmeticError("collision off the integer grid")
            y += num // adx
            if dx > 0:
                x, side = w, 1
            else:
                x, side = 0, 3
            dx = -dx
        else:
            num = ay * dx
            if num % ady:
                raise ArithmeticError("collision off the integer grid")
            x += num // ady
            if dy > 0:
                y, side = h, 2
            else:
                y, side = 0, 0
            dy = -dy
        events.extend((side, x, y))
        if x == x0 and y == y0 and dx == dx0 and dy == dy0:
            return CLOSED, -1, events
    return TRUNCATED, -1, events
