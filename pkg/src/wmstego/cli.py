"""
wmstego command line.

Exit codes: 0 ok, 1 I/O or format problem, 2 payload too large,
3 corrupt stego image, 64 bad usage.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .core import Algorithm, capacity, embed, extract
from .errors import CapacityError, CorruptStegoError, StegoError
from .image_io import load_image, save_image
from .metrics import psnr

EXIT_OK = 0
EXIT_IO = 1
EXIT_CAPACITY = 2
EXIT_CORRUPT = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _algorithm_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-a", "--algorithm",
        choices=[a.value for a in Algorithm],
        default=Algorithm.WEIGHTED.value,
        help="embedding scheme (default: weighted)",
    )


def _message_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-m", "--message", help="text message, encoded as UTF-8")
    g.add_argument(
        "-f", "--message-file",
        help="file whose raw bytes are the payload ('-' reads standard input)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wmstego",
        description="Hide and recover data in RGB images with weighted matching or simple LSB insertion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("embed", help="hide a message in a cover image")
    p.add_argument("-c", "--cover", required=True, help="cover image (PNG or BMP)")
    p.add_argument("-o", "--out", required=True, help="stego image to write (.png or .bmp)")
    _message_args(p)
    _algorithm_arg(p)

    p = sub.add_parser("extract", help="recover a hidden message")
    p.add_argument("-s", "--stego", required=True, help="stego image")
    p.add_argument("-o", "--out", help="write payload here instead of standard output")
    _algorithm_arg(p)

    p = sub.add_parser("capacity", help="print payload capacity in bytes")
    p.add_argument("image")

    p = sub.add_parser("psnr", help="print MSE and PSNR between two images")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("compare", help="PSNR of both algorithms on one cover and message")
    p.add_argument("-c", "--cover", required=True)
    _message_args(p)

    return parser


def _read_payload(args: argparse.Namespace) -> bytes:
    if args.message is not None:
        return args.message.encode("utf-8")
    if args.message_file == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(args.message_file).read_bytes()
    except OSError as exc:
        raise StegoError(f"cannot read message file {args.message_file}: {exc.strerror or exc}") from exc


def _fmt_db(report) -> str:
    return "identical" if report.identical else f"{report.psnr_db:.4f}"


def cmd_embed(args: argparse.Namespace) -> int:
    payload = _read_payload(args)
    cover = load_image(args.cover)
    result = embed(cover, payload, Algorithm(args.algorithm))
    save_image(result.stego, args.out)
    report = psnr(cover, result.stego)
    lines = [
        f"algorithm={result.algorithm.value}",
        f"payload_bytes={len(payload)}",
        f"capacity_bytes={capacity(cover)}",
        f"bits_embedded={result.bits_embedded}",
        f"channel_bytes_used={result.channel_bytes_used}",
        f"lsb_flips={result.lsb_flips}",
        f"mse={report.mse!r}",
        f"psnr_db={_fmt_db(report)}",
    ]
    print("\n".join(lines))
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    stego = load_image(args.stego)
    payload = extract(stego, Algorithm(args.algorithm))
    if args.out:
        try:
            Path(args.out).write_bytes(payload)
        except OSError as exc:
            raise StegoError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.flush()
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_capacity(args: argparse.Namespace) -> int:
    print(capacity(load_image(args.image)))
    return EXIT_OK


def cmd_psnr(args: argparse.Namespace) -> int:
    report = psnr(load_image(args.first), load_image(args.second))
    print(f"mse={report.mse!r}")
    print(f"psnr_db={_fmt_db(report)}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    payload = _read_payload(args)
    cover = load_image(args.cover)
    name = Path(args.cover).name
    rows = []
    for algo in (Algorithm.WEIGHTED, Algorithm.LSB):
        result = embed(cover, payload, algo)
        rows.append((name, algo.label, _fmt_db(psnr(cover, result.stego))))
    print("Cover Image\tAlgorithm used\tPSNR(dB)")
    for row in rows:
        print("\t".join(row))
    return EXIT_OK


COMMANDS = {
    "embed": cmd_embed,
    "extract": cmd_extract,
    "capacity": cmd_capacity,
    "psnr": cmd_psnr,
    "compare": cmd_compare,
}


def main(argv: Optional[Sequence[str | os.PathLike]] = None) -> int:
    parser = build_parser()
    if argv is not None:
        argv = [os.fspath(a) for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"wmstego: {exc}", file=sys.stderr)
        print(f"required_bytes={exc.required}", file=sys.stderr)
        print(f"available_bytes={exc.available}", file=sys.stderr)
        return EXIT_CAPACITY
    except CorruptStegoError as exc:
        print(f"wmstego: corrupt stego image: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (StegoError, OSError) as exc:
        print(f"wmstego: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
