"""Independent exact reference for the frozen expected values in the C++ tests.

Plain fractions and permutation enumeration; shares no code with the library.
Run: python3 tests/oracle/reference_values.py
"""
from fractions import Fraction as F
from itertools import permutations


def profile(segments):
    """Knots (x, F(x)) of the cumulative function."""
    pts = [(F(0), F(0))]
    for w, v in segments:
        x, y = pts[-1]
        pts.append((x + w, y + v))
    return pts


def cdf(segments, x):
    pts = profile(segments)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise ValueError(x)


def right_mark(segments, x, r):
    target = cdf(segments, x) + r
    if target > 1:
        return None
    # supremum of {z : F(z) <= target}, by scanning knots from the right
    pts = profile(segments)
    for (x0, y0), (x1, y1) in reversed(list(zip(pts, pts[1:]))):
        if y0 <= target:
            if y1 <= target:
                return x1
            return x0 + (x1 - x0) * (target - y0) / (y1 - y0)
    return F(0)


def left_mark(segments, x, r):
    target = cdf(segments, x) + r
    if target > 1:
        return None
    if r == 0:
        return x
    pts = profile(segments)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if y1 >= target:
            return x0 + (x1 - x0) * (target - y0) / (y1 - y0)
    return None


def weights(ws):
    total = sum(ws)
    return [(F(1, len(ws)), F(w, total)) for w in ws]


def chain(vals, order, shares, mark):
    x = F(0)
    pts = [x]
    for a in order:
        if shares[a] > 1:
            return None, pts
        x = mark(vals[a], x, shares[a])
        if x is None:
            return None, pts
        pts.append(x)
    return x, pts


def exists(vals, shares, mode="strong"):
    mark = left_mark if mode == "proportional" else right_mark
    for order in permutations(range(len(vals))):
        end, _ = chain(vals, order, shares, mark)
        if end is not None and (end <= 1 if mode == "proportional" else end < 1):
            return True
    return False


ALICE1 = weights([9, 0, 0, 0, 9, 0, 0, 0, 0, 0, 9])
BOB1 = weights([1, 4, 4, 3, 1, 5, 1, 1, 2, 4, 1])
BOB2 = weights([1, 4, 4, 3, 1, 5, 5, 1, 1, 1, 1])
CHANA = weights([1, 8, 2, 2, 1, 1, 1, 2, 4, 4, 1])
EX1 = [ALICE1, BOB1, CHANA]
EX2 = [ALICE1, BOB2, CHANA]
EX3 = [weights([4, 2, 2, 1, 3]), weights([4, 0, 2, 2, 4]), weights([4, 0, 2, 2, 4])]
THIRD = [F(1, 3)] * 3
UNIFORM = [(F(1), F(1))]


def interval(seg, r):
    return left_mark(seg, F(0), r), right_mark(seg, F(0), r)


def thm5_baseline(n, M):
    wp = [F(M + 2 ** (i - 1), (n - 1) * M + 2 ** (n - 1) - 1) for i in range(1, n)]
    a = [1 / (n * w) for w in wp]
    part = F(1, 2 * n - 1)
    vals = []
    for i in range(n - 1):
        segs = []
        for j in range(1, 2 * n):
            if j % 2 == 1:
                segs.append((part, F(0)))
            elif j < 2 * n - 2:
                segs.append((part, a[i] / (n - 2)))
            else:
                segs.append((part, 1 - a[i]))
        vals.append(segs)
    vals.append([(part, F(1, n) if j % 2 == 1 else F(0)) for j in range(1, 2 * n)])
    return vals


def thm11_baseline(n, z, M):
    wp = [F(M + 2 ** (i - 1), (n - 1) * M + 2 ** (n - 1) - 1) for i in range(1, n)]
    a = [(F(1, n) + z) / w for w in wp]
    half = F(1, 2)
    vals = [[(half, ai), (half, 1 - ai)] for ai in a]
    vals.append([(half, 1 - F(1, n) - z), (half, F(1, n) + z)])
    return vals


if __name__ == "__main__":
    two = [UNIFORM, [(F(1, 2), F(1)), (F(1, 2), F(0))]]
    print("mark_sequence (2,1) from 0:", chain(two, [1, 0], [F(1, 2)] * 2, right_mark))
    print("Bob/Chana 1/2-marks:", right_mark(BOB1, F(0), F(1, 2)), right_mark(CHANA, F(0), F(1, 2)))
    print("Bob/Chana strong exists:", exists([BOB1, CHANA], [F(1, 2)] * 2))
    prop = [[(F(1, 2), F(0)), (F(1, 2), F(1))], [(F(1, 2), F(1)), (F(1, 2), F(0))]]
    print("proportional (1/4,3/4):", exists(prop, [F(1, 4), F(3, 4)], "proportional"),
          chain(prop, [1, 0], [F(1, 4), F(3, 4)], left_mark))
    for r in (F(1, 3), F(2, 3)):
        print("Ex1 intervals r=%s:" % r, [interval(v, r) for v in EX1])
    print("Ex3 intervals r=2/3:", [interval(v, F(2, 3)) for v in EX3])
    print("Ex1/2/3 strong:", exists(EX1, THIRD), exists(EX2, THIRD), exists(EX3, THIRD))
    print("Ex1 left chain (Chana, Alice, Bob):", chain(EX1, [2, 0, 1], THIRD, left_mark))
    b = [(F(1, 2), F(3, 4)), (F(1, 2), F(1, 4))]
    y = right_mark(b, F(0), F(1, 2))
    ys = (y + F(1, 2)) / 2
    print("strengthen case 1: y=%s y*=%s B=%s A=%s" % (y, ys, cdf(b, ys), 1 - ys))
    bm = list(reversed(b))
    y = right_mark(bm, F(1, 2), F(3, 4) - F(1, 2))
    ys = (F(1, 2) + y) / 2
    print("strengthen case 2: y=%s y*=%s A=%s B=%s" % (y, ys, ys, 1 - cdf(bm, ys)))
    for n in (3, 4, 5):
        M = 2 ** n * n * n
        print("thm5 baseline n=%d M=%d strong:" % (n, M), exists(thm5_baseline(n, M), [F(1, n)] * n))
    z = F(1, 12)
    v11 = thm11_baseline(3, z, 8)
    print("thm11 n=3 z=1/12 M=8 plus_z:", exists(v11, [F(1, 3) + z] * 3), "strong:", exists(v11, THIRD))
