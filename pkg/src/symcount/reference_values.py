"""Reference closed forms and counts used for cross-validation.

The parity-branch polynomials for n = 3..9, the rational generating
functions sum_l M(n,l) x^l for the same range, and two large individual
counts are recorded here as independent fixtures.  Every computation
path in the package (backtracking, modular reconstruction, interpolation,
quadrature, asymptotics) is tested against this data, and the data is
itself internally cross-checked: the series expansions must reproduce
the branch polynomials coefficient by coefficient, and the branch
polynomial for n = 9 must reproduce the recorded count M(9, 20).

Branch coefficients are ascending in l (index = power).  Generating
functions are stored in their printed form

    (1-x)^minus_power (1+x)^plus_power * L_n(x) = numerator(x)

and `canonical_series` converts to the common denominator
(1-x^2)^(d+1), which multiplies the numerator by (1+x)^(d+1-plus_power);
the conversion is only valid because minus_power equals d+1 for every n
here, which the converter asserts.
"""

from dataclasses import dataclass
from fractions import Fraction as F

from .ehrhart import EhrhartSeries, Quasipolynomial2, branch_degree, poly_mul, poly_pow

__all__ = [
    "REFERENCE_QP",
    "SERIES_PRINTED",
    "KNOWN_COUNTS",
    "PrintedSeries",
    "canonical_series",
    "reference_count",
]


def _qp(n, even_desc, odd_desc):
    """Build a branch pair from descending coefficient lists."""
    d = branch_degree(n)
    even = [F(0)] * (d + 1)
    for i, c in enumerate(even_desc):
        even[len(even_desc) - 1 - i] = F(c)
    if odd_desc is None:
        odd = tuple([F(0)] * (d + 1))
    else:
        odd = [F(0)] * (d + 1)
        for i, c in enumerate(odd_desc):
            odd[len(odd_desc) - 1 - i] = F(c)
        odd = tuple(odd)
    return Quasipolynomial2(n, tuple(even), odd)


_E4 = ["1/2", "3/2", 1]

_E5 = ["5/256", "25/128", "155/192", "55/32", "47/24", 1]

_E6 = [
    "19/120960", "19/5376", "143/4032", "5/24", "4567/5760",
    "785/384", "10919/3024", "955/224", "857/280", 1,
]

_E7 = [
    "533/3633315840", "533/86507520", "279413/2335703040", "9233/6488064",
    "3076459/265420800", "151339/2211840", "4679131/15482880", "9367/9216",
    "43502617/16588800", "478009/92160", "71076539/9123840", "661673/76032",
    "1712147/246400", "9649/2640", 1,
]

_E8 = [
    "70241/5088422500761600", "70241/72691750010880",
    "18703309/585359881666560", "12330581/18582853386240",
    "428460619/44144787456000", "33009749/310542336000",
    "90842880341/100429391462400", "5580172163/910924185600",
    "1110632463421/33108590592000", "4381892419/29196288000",
    "304644862903/551809843200", "22001378209/13138329600",
    "262880239845943/62768369664000", "12867890603299/1494484992000",
    "3890196991231/269007298560", "9530810537/485222400",
    "76295531167/3592512000", "1100694281/61776000",
    "50787821048/4583103525", "135038369/29099070", 1,
]

# M_o(8) = M_e(8) minus a degree-5 correction.
_O8_CORRECTION = [
    "35/1048576", "1225/2097152", "13685/3145728",
    "17885/1048576", "233261/6291456", "78057/2097152",
]

_E9 = [
    "863924282670630091/7732694804887618394297204736000000",
    "863924282670630091/71599025971181651799048192000000",
    "10311705659720524879/16522852147195765799780352000000",
    "44159888290330963/2145824954181268285685760000",
    "44603828594214317123/91793623039976476665446400000",
    "4134171051301720697/472621628924364010291200000",
    "2139768518991928638127/17143275449165567282380800000",
    "2365877475528196499/1632692899920530217369600",
    "167364777037473990001/12005094852356839833600000",
    "43210221809651966023/383621452048996761600000",
    "7598908879241416557943/9846283935924250214400000",
    "78473046995519797477/17375795181042794496000",
    "2690417378247820105229333/118589802110617072435200000",
    "12598164604216578106061/128343941678157004800000",
    "39802237244716247322233/108598719881517465600000",
    "183315648883655207683/155141028402167808000",
    "11492891877126624163867/3496549693154918400000",
    "20646561932994651460327/2622412269866188800000",
    "12699041960623534314853039/784756871757456998400000",
    "3536936635157608410019/124564582818643968000",
    "602776622158017864239297/14273025114636288000000",
    "8959111748174759872739/169916965650432000000",
    "62149609860286754066479/1139859644571648000000",
    "416558573311485749/9089789829120000",
    "7739053944610908107/254233401117696000",
    "1309315468639693/85753329742080",
    "94565099767/17847429600", 1,
]


def _o6_desc():
    out = list(_E6)
    out[-1] = F(1) - F("5/256")
    return out


def _o8_desc():
    out = [F(c) for c in _E8]
    for i, c in enumerate(_O8_CORRECTION):
        out[len(out) - 6 + i] -= F(c)
    return out


REFERENCE_QP = {
    3: _qp(3, [1], None),
    4: _qp(4, _E4, _E4),
    5: _qp(5, _E5, None),
    6: _qp(6, _E6, _o6_desc()),
    7: _qp(7, _E7, None),
    8: _qp(8, _E8, _o8_desc()),
    9: _qp(9, _E9, None),
}


@dataclass(frozen=True)
class PrintedSeries:
    """Numerator (ascending) over (1-x)^minus_power (1+x)^plus_power."""

    n: int
    numerator: tuple
    minus_power: int
    plus_power: int


def _palindrome(half, top):
    """Ascending coefficients of a palindromic polynomial of degree `top`
    given the first half (degrees 0, ..., len(half)-1 of the support
    stride)."""
    out = [0] * (top + 1)
    stride = top // (2 * (len(half) - 1)) if len(half) > 1 else 1
    for i, c in enumerate(half):
        out[i * stride] = c
        out[top - i * stride] = c
    return tuple(out)


SERIES_PRINTED = {
    3: PrintedSeries(3, (1,), 1, 1),
    4: PrintedSeries(4, (1,), 3, 0),
    5: PrintedSeries(5, _palindrome([1, 16, 41], 8), 6, 6),
    6: PrintedSeries(6, _palindrome([1, 6, 30, 40], 6), 10, 1),
    7: PrintedSeries(
        7,
        _palindrome(
            [1, 807, 81483, 1906342, 15277449, 50349627, 74301542], 24
        ),
        15,
        15,
    ),
    8: PrintedSeries(
        8,
        _palindrome(
            [
                1, 90, 4726, 107050, 1261121, 8761248, 39187016,
                119662536, 259344246, 408811676, 475095180,
            ],
            20,
        ),
        21,
        6,
    ),
    9: PrintedSeries(
        9,
        _palindrome(
            [
                1, 52524, 169345602, 78276428212, 10217460516057,
                527531262668208, 13016462628712186, 172410423955058664,
                1322251960254170931, 6176715510750440488,
                18182086106689738044, 34470475812807166836,
                42606701216240491693,
            ],
            48,
        ),
        28,
        28,
    ),
}


def canonical_series(n):
    """Printed series rewritten over the denominator (1-z^2)^(d+1)."""
    ps = SERIES_PRINTED[n]
    d = branch_degree(n)
    if ps.minus_power != d + 1:
        raise ValueError(
            f"printed denominator for n={n} has (1-x)^{ps.minus_power}, "
            f"cannot normalize to (1-x^2)^{d + 1}"
        )
    extra = d + 1 - ps.plus_power
    if extra < 0:
        raise ValueError(f"printed (1+x) power exceeds {d + 1} for n={n}")
    num = poly_mul(list(ps.numerator), poly_pow([1, 1], extra))
    top = 2 * (d + 1)
    if len(num) > top + 1:
        raise ValueError(f"canonical numerator too long for n={n}")
    num = num + [0] * (top + 1 - len(num))
    return EhrhartSeries(n, tuple(num), d + 1)


KNOWN_COUNTS = {
    (9, 20): 1955487489759152410696,
    (19, 10): 613329062511931789477677176839174642138032757885191693120,
}


def reference_count(n, l):
    """Exact count from the recorded branch polynomials (3 <= n <= 9)."""
    if n not in REFERENCE_QP:
        raise KeyError(f"no recorded branch polynomials for n={n}")
    qp = REFERENCE_QP[n]
    coeffs = qp.even if l % 2 == 0 else qp.odd
    acc = F(0)
    for c in reversed(coeffs):
        acc = acc * l + c
    if acc.denominator != 1:
        raise ValueError(f"non-integer reference value at n={n}, l={l}")
    return int(acc)
