from __future__ import annotations

# |M_n(12123434)| and |M_n(1212345345)| for n = 1..10, as printed.
NONCROSSING_PREFIX_TABLE = {
    1: (1, 1),
    2: (3, 3),
    3: (15, 15),
    4: (104, 105),
    5: (910, 944),
    6: (9503, 10341),
    7: (114317, 133132),
    8: (1547124, 1961919),
    9: (23169162, 32441303),
    10: (379308106, 592718236),
}

NONCROSSING_PREFIX_PATTERNS = ("12123434", "1212345345")

# Printed with three leading ones; the counts for n = 0, 1, 2 are 1, 1, 3.
PRINTED_UNLABELED_112323 = (1, 1, 1, 3, 9, 25, 68, 189)
UNLABELED_112323_FROM_N2 = (3, 9, 25, 68, 189)

# Printed member list of [123132]; 121323 appears twice and 123132 is missing.
PRINTED_CLASS_123132 = ("121323", "123213", "121323")

UNLABELED_ORDER_THREE = {
    "112323": ("112323", "123231", "123312", "121233", "121332", "122313"),
    "123132": ("121323", "123132", "123213"),
    "123321": ("123321", "122133", "112332"),
    "112233": ("112233", "122331"),
    "123123": ("123123",),
}

TIPS = [
    "count --avoid 1212 --n 5: число некрестящихся паросочетаний (числа Каталана).",
    "count --avoid-unlabeled [112323] --n 6 --check: формула против перебора.",
    "series --name lifted-1212 --order 10 и --name lifted-1212-radical дают один ряд.",
    "interval --family 6 --check: f_6 = Fib(8) - 1 = 20.",
]
