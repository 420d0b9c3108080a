"""Command-line interface.

Subcommands: construct, encode, decode, channel, verify, bounds, oracle.
Array I/O uses the shared text format (rows over {0,1,?}, '#' comments,
'# L=<int>' declares the full length for ragged input).  Exit status: 0 on
success, 1 when a verification finds a failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import basecodes
from .arrays import (BitArray, format_bit_array, format_erased, format_ragged,
                     parse_bit_array, parse_erased, parse_ragged)
from .bounds import (a_n_d_brute, ball_count_brute, claim8_bound,
                     dc_bound_part1, dc_bound_part2_part3, m_s_brute,
                     singleton_te, te_sphere_packing, ted_upper_bound,
                     v_te_general, v_te_small)
from .channel import ChannelSpec, apply_channel, random_instance, roundtrip_harness
from .dc import DcCode
from .errors import ArrayCodeError
from .tables import render_rows, table_i, table_ii, table_iii
from .te import (TeCodec, TeParityCheck, construct_1, construct_claim5,
                 construct_claim7, construct_even, construct_hasse,
                 construct_parity, verify_min_distance)
from .ted import TedCode


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required here")


def build_te_code(args) -> TeParityCheck:
    kind = args.code
    if kind == "construction-1":
        _need(args, "n", "d")
        if args.d % 2 == 0 or args.d < 3:
            raise UsageError("construction-1 needs an odd d >= 3")
        t = (args.d - 1) // 2
        if args.d == 3:
            base = basecodes.hamming_pcm(args.n)
        else:
            base, _ = basecodes.bch_pcm(args.n * t, args.d)
        return construct_1(base, args.n, t)
    if kind == "even-ext":
        _need(args, "n", "d")
        if args.d == 2:
            return construct_parity(args.n, args.L or 1)
        if args.d % 2 or args.d < 4:
            raise UsageError("even-ext needs an even d >= 4 (or d = 2)")
        t = (args.d - 2) // 2
        if args.d == 4:
            base = basecodes.extended_hamming_pcm(args.n)
        else:
            g = basecodes.bch_generator(_mu_for(args.n * t + 1), args.d - 1,
                                        with_parity_factor=True)
            base = basecodes.cyclic_pcm(g, args.n * t + 1)
        return construct_even(base, args.n, t)
    if kind == "claim-5":
        _need(args, "n")
        return construct_claim5(args.n)
    if kind == "claim-7":
        _need(args, "n")
        return construct_claim7(args.n)
    if kind == "hasse":
        _need(args, "n", "L", "e")
        return construct_hasse(args.n, args.L, args.e, reduced=not args.raw)
    raise UsageError(f"unknown TE construction {kind!r}")


def _mu_for(length: int) -> int:
    mu = 2
    while (1 << mu) - 1 < length:
        mu += 1
    return mu


def load_codec(path: str):
    blob = Path(path).read_bytes()
    if blob[:1] == b"{":
        desc = json.loads(blob)
        if desc["kind"] == "dc":
            return DcCode(desc["n"], desc["L"], desc["t"])
        if desc["kind"] == "ted":
            return TedCode(desc["n"], desc["L"], desc["t"], desc["e"])
        raise UsageError(f"unknown codec kind {desc['kind']!r}")
    return TeCodec(TeParityCheck.from_bytes(blob))


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    if args.code in ("dc", "ted"):
        _need(args, "n", "L", "t")
        if args.code == "dc":
            codec = DcCode(args.n, args.L, args.t)
        else:
            _need(args, "e")
            codec = TedCode(args.n, args.L, args.t, args.e)
        desc = codec.descriptor()
        desc["message_bits"] = codec.message_bits
        _write(args, json.dumps(desc, indent=2) + "\n")
        return 0
    H = build_te_code(args)
    if args.out:
        Path(args.out).write_bytes(H.to_bytes())
        summary = (f"wrote {args.out}: provenance={H.provenance} n={H.n} L={H.L} "
                   f"redundancy={H.redundancy} dimension={H.dimension}\n")
        sys.stdout.write(summary)
        if args.dump:
            sys.stdout.write(H.dump_text())
    else:
        sys.stdout.write(H.dump_text())
    return 0


def cmd_encode(args) -> int:
    codec = load_codec(args.code_file)
    text = Path(args.infile).read_text() if args.infile else sys.stdin.read()
    bits = [int(ch) for tok in text.split() for ch in tok if ch in "01"]
    if len(bits) != codec.message_bits:
        raise UsageError(f"codec expects {codec.message_bits} message bits, got {len(bits)}")
    x = codec.encode(bits)
    _write(args, format_bit_array(x))
    return 0


def cmd_decode(args) -> int:
    codec = load_codec(args.code_file)
    text = Path(args.infile).read_text() if args.infile else sys.stdin.read()
    if isinstance(codec, TeCodec):
        received = parse_erased(text)
    else:
        received = parse_ragged(text, codec.L)
    decoded = codec.decode(received)
    if args.emit_message:
        _write(args, "".join(str(b) for b in codec.message_of(decoded)) + "\n")
    else:
        _write(args, format_bit_array(decoded))
    return 0


def _channel_spec(args) -> ChannelSpec:
    if args.kind == "te":
        _need(args, "e")
        return ChannelSpec("te", e=args.e)
    if args.kind == "del":
        _need(args, "t", "s")
        return ChannelSpec("del", t=args.t, s=args.s)
    _need(args, "t", "s", "e")
    return ChannelSpec("ted", t=args.t, s=args.s, e=args.e)


def cmd_channel(args) -> int:
    text = Path(args.infile).read_text() if args.infile else sys.stdin.read()
    x = parse_bit_array(text)
    spec = _channel_spec(args)
    if args.pattern:
        if spec.kind != "te":
            raise UsageError("--pattern applies to the te channel only")
        instance = tuple(int(v) for v in args.pattern.split(","))
    else:
        instance = random_instance(spec, x.n, x.L, random.Random(args.seed))
    out = apply_channel(x, spec, instance)
    sys.stderr.write(f"instance: {instance}\n")
    if spec.kind == "te":
        _write(args, format_erased(out))
    else:
        _write(args, format_ragged(out))
    return 0


def cmd_verify(args) -> int:
    if args.roundtrip:
        codec = load_codec(args.code_file)
        spec = _channel_spec(args)
        record = roundtrip_harness(codec, spec, messages=args.messages,
                                   exhaustive=args.exhaustive, seed=args.seed,
                                   instances=args.max_work)
        sys.stdout.write(record.summary() + "\n")
        if record.first_counterexample:
            sys.stdout.write(f"counterexample: {record.first_counterexample}\n")
        return 0 if record.failures == 0 else 1
    codec = load_codec(args.code_file)
    if not isinstance(codec, TeCodec):
        raise UsageError("min-distance verification applies to TE parity checks")
    _need(args, "d")
    result = verify_min_distance(codec.H, args.d)
    exact = "exactly" if result.exact else "at least"
    sys.stdout.write(f"minimum TE distance {exact} {result.distance}"
                     + (f" (witness pattern {result.witness})" if result.witness else "")
                     + "\n")
    ok = result.distance >= args.d
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    fmt = args.format
    if args.table:
        n_values = range(args.n_min, args.n_max + 1)
        if args.table == "I":
            rows = table_i(n_values, (2, 3, 4, 5))
        elif args.table == "II":
            rows = table_ii(list(n_values))
        else:
            _need(args, "L", "t")
            rows = table_iii([(n, args.L, args.t) for n in n_values])
        _write(args, render_rows(rows, fmt))
        return 0
    name = args.bound
    if name == "v-te":
        _need(args, "r", "n", "L")
        value = (v_te_small(args.r, args.n, args.L) if args.r <= args.L
                 else v_te_general(args.r, args.n, args.L))
        _write(args, f"name=v-te n={args.n} L={args.L} r={args.r} value={value}\n")
        return 0
    if name == "sphere":
        _need(args, "n", "L", "d")
        info = te_sphere_packing(args.n, args.L, args.d)
        _write(args, info["report"].record() + "\n")
        return 0
    if name == "column-split":
        _need(args, "n", "d")
        a = args.a_nd if args.a_nd is not None else a_n_d_brute(args.n, args.d)
        prov = "supplied" if args.a_nd is not None else "brute-force"
        _write(args, claim8_bound(args.n, args.d, a, prov).record() + "\n")
        return 0
    if name == "singleton":
        _need(args, "n", "L", "m_size")
        _write(args, f"name=singleton n={args.n} L={args.L} M={args.m_size} "
               f"value={singleton_te(args.n, args.L, args.m_size)}\n")
        return 0
    if name == "dc-1":
        _need(args, "n", "L", "t", "s")
        m = args.m_s if args.m_s is not None else m_s_brute(args.L, args.s)
        prov = "supplied" if args.m_s is not None else "brute-force"
        _write(args, dc_bound_part1(args.n, args.L, args.t, args.s, m, prov).record() + "\n")
        return 0
    if name == "dc-23":
        _need(args, "n", "L", "t", "s")
        info = dc_bound_part2_part3(args.n, args.L, args.t, args.s)
        _write(args, info["report"].record() + "\n")
        return 0
    if name == "ted-upper":
        _need(args, "n", "L")
        info = ted_upper_bound(args.n, args.L)
        _write(args, info["report"].record()
               + f" finite={float(info['finite']):.6g}"
               + f" asymptotic={float(info['asymptotic']):.6g}\n")
        return 0
    raise UsageError(f"unknown bound {name!r}")


def cmd_oracle(args) -> int:
    which = args.which
    lines = []
    if which == "ball":
        _need(args, "n", "L", "r")
        rng = random.Random(args.seed)
        x = BitArray.from_lists([[rng.randrange(2) for _ in range(args.L)]
                                 for _ in range(args.n)])
        value = ball_count_brute(x, args.r)
        lines.append(f"oracle=ball n={args.n} L={args.L} r={args.r} "
                     f"seed={args.seed} value={value}")
    elif which == "m-s":
        _need(args, "L", "s")
        lines.append(f"oracle=m-s L={args.L} s={args.s} value={m_s_brute(args.L, args.s)}")
    elif which == "a-n-d":
        _need(args, "n", "d")
        lines.append(f"oracle=a-n-d n={args.n} d={args.d} value={a_n_d_brute(args.n, args.d)}")
    else:
        raise UsageError(f"unknown oracle {which!r}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arraycodes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int)
        p.add_argument("--L", type=int)
        p.add_argument("--e", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "records"), default="text")
        p.add_argument("--in", dest="infile")
        p.add_argument("--out")
        p.add_argument("--exhaustive", action="store_true")
        p.add_argument("--max-work", type=int)

    p = sub.add_parser("construct", help="build a code and emit its descriptor")
    common(p)
    p.add_argument("--code", required=True,
                   choices=("construction-1", "even-ext", "claim-5", "claim-7",
                            "hasse", "dc", "ted"))
    p.add_argument("--raw", action="store_true",
                   help="hasse: raw derivative stack, no reduced variants")
    p.add_argument("--dump", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="message bits -> array")
    common(p)
    p.add_argument("--code-file", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="received array -> codeword (or message)")
    common(p)
    p.add_argument("--code-file", required=True)
    p.add_argument("--emit-message", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("channel", help="apply a channel instance to an array")
    common(p)
    p.add_argument("--kind", required=True, choices=("te", "del", "ted"))
    p.add_argument("--pattern", help="explicit te pattern, comma-separated")
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("verify", help="min-distance or round-trip verification")
    common(p)
    p.add_argument("--code-file", required=True)
    p.add_argument("--roundtrip", action="store_true")
    p.add_argument("--kind", choices=("te", "del", "ted"))
    p.add_argument("--messages", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate a bound or regenerate a table")
    common(p)
    p.add_argument("--bound", choices=("v-te", "sphere", "column-split",
                                       "singleton", "dc-1", "dc-23", "ted-upper"))
    p.add_argument("--table", choices=("I", "II", "III"))
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--r", type=int)
    p.add_argument("--a-nd", type=int)
    p.add_argument("--m-s", type=int)
    p.add_argument("--m-size", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", help="run a brute-force oracle, freeze the value")
    common(p)
    p.add_argument("--which", required=True, choices=("ball", "m-s", "a-n-d"))
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, FileNotFoundError, RuntimeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ArrayCodeError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
