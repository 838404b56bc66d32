from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from .cli.handlers import (
    BARE_FLAG,
    EXIT_USAGE,
    SERIES,
    SERIES_ALIASES,
    cmd_bijection,
    cmd_count,
    cmd_interval,
    cmd_render,
    cmd_series,
)
from .cli.output import FORMATS
from .cli.render import STYLES
from .config import get_settings
from .reference import TIPS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchkit",
        description="Шаблоны в паросочетаниях: перебор, производящие функции, биекции, интервалы.",
        epilog="\n".join(TIPS),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="Число паросочетаний, избегающих шаблонов")
    target = count.add_mutually_exclusive_group(required=True)
    target.add_argument("--avoid", help="Шаблоны через запятую (или через ';' в записи с запятыми)")
    target.add_argument("--avoid-unlabeled", dest="avoid_unlabeled", help="Неразмеченный шаблон, например [112323]")
    target.add_argument("--mu", help="Минимально содержащие шаблон sigma")
    count.add_argument("--n", type=int, required=True, help="Максимальный порядок")
    count.add_argument("--connected", action="store_true", help="Только связные паросочетания")
    count.add_argument("--source", choices=("brute-force", "formula"), default="brute-force")
    count.add_argument("--check", action="store_true", help="Сравнить формулу с перебором")
    count.add_argument("--no-prune", dest="no_prune", action="store_true", help="Перебор без отсечений")
    count.add_argument("--jobs", type=int, default=None)
    count.add_argument("--format", choices=FORMATS, default="json")
    count.set_defaults(handler=cmd_count)

    series = sub.add_parser("series", help="Коэффициенты производящей функции")
    series.add_argument("--name", required=True, choices=sorted([*SERIES, *SERIES_ALIASES]))
    series.add_argument("--order", type=int, required=True)
    series.add_argument("--sigma", help="Связное sigma для ряда lifting")
    series.add_argument("--depth", type=int, default=1, help="Сколько раз поднимать sigma")
    series.add_argument("--check", action="store_true")
    series.add_argument("--jobs", type=int, default=None)
    series.add_argument("--format", choices=FORMATS, default="json")
    series.set_defaults(handler=cmd_series)

    bijection = sub.add_parser("bijection", help="Тернарные деревья и [123132]")
    action = bijection.add_mutually_exclusive_group(required=True)
    action.add_argument(
        "--phi", metavar="TREE", nargs="?", const=BARE_FLAG, help="Дерево в записи '(t1 t2 t3)', '.' для пустого"
    )
    action.add_argument("--psi", metavar="MATCHING", nargs="?", const=BARE_FLAG)
    action.add_argument("--perm", metavar="PERMUTATION")
    action.add_argument("--roundtrip", metavar="ORDER", nargs="?", type=int, const=BARE_FLAG)
    bijection.add_argument("--tree", help="Дерево для --phi")
    bijection.add_argument("--matching", help="Паросочетание для --psi")
    bijection.add_argument("--order", type=int, help="Порядок для --roundtrip")
    bijection.set_defaults(handler=cmd_bijection)

    interval = sub.add_parser("interval", help="Интервал [11, tau]")
    shape = interval.add_mutually_exclusive_group(required=True)
    shape.add_argument("--tau")
    shape.add_argument("--ks", metavar="K,R,S")
    shape.add_argument("--khabc", metavar="K,H,A,B,C")
    shape.add_argument("--family", type=int, metavar="N")
    interval.add_argument("--check", action="store_true")
    interval.set_defaults(handler=cmd_interval)

    render = sub.add_parser("render", help="SVG-диаграмма хорд")
    drawn = render.add_mutually_exclusive_group(required=True)
    drawn.add_argument("--matching")
    drawn.add_argument("--unlabeled")
    render.add_argument("--style", choices=STYLES, default="linear")
    render.add_argument("--output", help="Файл для SVG (по умолчанию stdout)")
    render.set_defaults(handler=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, settings, sys.stdout, sys.stderr)
    except ValueError as exc:
        sys.stderr.write(f"Ошибка: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
