"""
命令行入口

    python main.py nf "s1 s2^-1 s1" --n 3
    python main.py eq "s1 s2 s1 s2 s1 s2" "s2 s1 s2 s1 s2 s1" --n 3
    python main.py witness --beta "s1" --n 3 --json
    python main.py identities --n-max 6

退出码：0 成功，1 领域错误（或验证失败），2 解析错误。
nf 与 perm 在未给出字时从标准输入逐行读取。
"""

import argparse
import json
import os
import random
import sys
from typing import Iterable, List, Optional

from src.analysis.braid_core import (
    CycleType,
    Permutation,
    cycle_type,
    exponent_sum,
    forget_strand,
    permutation_of,
)
from src.analysis.intermediate_subgroups import (
    canonical_representative,
    enumerate_intermediate,
    lift_permutation,
    member,
    subgroup_of,
)
from src.analysis.order_engine import dehornoy_compare, partial_compare
from src.analysis.torsion_witness import (
    build_certificate,
    build_certificate_infinite,
    certificate_from_dict,
    scan_cycle_types,
    scan_to_dataframe,
    verify_certificate,
)
from src.analysis.word_problem import (
    equal,
    handle_reduce_trivial,
    is_trivial,
    normal_form,
    run_identity_suite,
    run_noncommutation_suite,
)
from src.config.models import SamplingConfig, WitnessScanConfig
from src.settings import settings
from src.utils.sampling import random_word
from src.utils.word_syntax import (
    WordSyntaxError,
    format_word,
    parse_infinite_word,
    parse_word,
)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2


def _emit(data, as_json: bool):
    if as_json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print(data)


def _batch(words: List[str]) -> Iterable[str]:
    """位置参数优先，否则逐行读取标准输入（跳过空行与 # 注释）"""
    if words:
        yield from words
        return
    for line in sys.stdin:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


# ============================================================================
# 子命令
# ============================================================================


def cmd_nf(args) -> int:
    results = []
    for text in _batch(args.words):
        nf = normal_form(parse_word(text, args.n))
        results.append({"word": text, "normal_form": nf.format()})
        if not args.json:
            print(nf.format())
    if args.json:
        _emit(results, True)
    return EXIT_OK


def cmd_eq(args) -> int:
    verdict = equal(parse_word(args.left, args.n), parse_word(args.right, args.n))
    if args.json:
        _emit(
            {
                "equal": verdict.equal,
                "left": verdict.left_normal_form.format(),
                "right": verdict.right_normal_form.format(),
            },
            True,
        )
    else:
        print("equal" if verdict.equal else "not equal")
    return EXIT_OK


def cmd_trivial(args) -> int:
    word = parse_word(args.word, args.n)
    trivial = handle_reduce_trivial(word) if args.method == "handle" else is_trivial(word)
    _emit({"trivial": trivial} if args.json else ("trivial" if trivial else "nontrivial"), args.json)
    return EXIT_OK


def cmd_perm(args) -> int:
    results = []
    for text in _batch(args.words):
        p = permutation_of(parse_word(text, args.n))
        results.append({"word": text, "images": list(p.images), "cycles": p.cycle_string()})
        if not args.json:
            print(p.one_line() if args.images else p.cycle_string())
    if args.json:
        _emit(results, True)
    return EXIT_OK


def cmd_cycle_type(args) -> int:
    t = cycle_type(permutation_of(parse_word(args.word, args.n)))
    _emit({"n": t.n, "cycle_type": list(t.partition)} if args.json else str(t), args.json)
    return EXIT_OK


def cmd_exp(args) -> int:
    value = exponent_sum(parse_word(args.word, args.n))
    _emit({"exp": value} if args.json else value, args.json)
    return EXIT_OK


def cmd_cmp(args) -> int:
    u, v = parse_word(args.left, args.n), parse_word(args.right, args.n)
    if args.order == "dehornoy":
        verdict = dehornoy_compare(u, v)
    else:
        verdict = partial_compare(u, v)
    _emit({"order": args.order, "verdict": verdict.value} if args.json else verdict.value, args.json)
    return EXIT_OK


def cmd_subgroup(args) -> int:
    if args.action == "member":
        beta = parse_word(args.beta, args.n)
        word = parse_word(args.word, beta.n)
        result = member(subgroup_of(beta), word)
        _emit({"member": result} if args.json else ("member" if result else "not member"), args.json)
    elif args.action == "canon":
        parts = tuple(int(p) for p in args.type.split(",") if p.strip())
        if args.n is None:
            raise ValueError("canon 需要 --n")
        word = canonical_representative(CycleType(parts, args.n), args.n)
        data = {"n": args.n, "type": list(parts), "word": format_word(word)}
        _emit(data if args.json else format_word(word), args.json)
    elif args.action == "export":
        beta = parse_word(args.beta, args.n)
        _emit(subgroup_of(beta).to_dict(), True)
    else:
        if args.n is None:
            raise ValueError("list 需要 --n")
        _emit([d.to_dict() for d in enumerate_intermediate(args.n)], True)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.verify_file:
        with open(args.verify_file, "r", encoding="utf-8") as f:
            cert = certificate_from_dict(json.load(f))
        report = verify_certificate(cert)
        for check in report.checks:
            mark = "✓" if check.passed else "✗"
            print(f"{mark} {check.name}: {check.detail}")
        return EXIT_OK if report.all_passed else EXIT_DOMAIN_ERROR

    if args.scan is not None:
        config = WitnessScanConfig(
            n=args.scan,
            max_workers=args.workers or settings.engine_config["scan_workers"],
            show_progress=not args.quiet,
        )
        results = scan_cycle_types(config.n, config)
        df = scan_to_dataframe(results)
        if args.json:
            _emit(json.loads(df.to_json(orient="records", force_ascii=False)), True)
        else:
            print(df.to_string(index=False))
        return EXIT_OK if all(r.passed for r in results) else EXIT_DOMAIN_ERROR

    if args.beta is None:
        raise ValueError("witness 需要 --beta、--scan 或 --verify-file 之一")
    if args.infinite:
        cert = build_certificate_infinite(parse_infinite_word(args.beta))
    else:
        cert = build_certificate(parse_word(args.beta, args.n))
    report = verify_certificate(cert)

    if args.json:
        _emit(cert.to_dict(verified=report.all_passed), True)
    else:
        print(f"case: {cert.case.value}  n = {cert.n}  p = {cert.p}")
        print(f"x = {format_word(cert.x)}")
        print(f"y = {format_word(cert.y)}")
        print(f"g = {format_word(cert.g)}")
        print(f"conjugators: {len(cert.conjugators)}")
        for check in report.checks:
            mark = "✓" if check.passed else "✗"
            print(f"{mark} {check.name}")
    return EXIT_OK if report.all_passed else EXIT_DOMAIN_ERROR


def cmd_identities(args) -> int:
    report = run_identity_suite(args.n_max)
    if not args.skip_noncommutation:
        report.entries.extend(run_noncommutation_suite(max(3, min(args.n_max, 6))).entries)

    if args.csv:
        os.makedirs(os.path.dirname(os.path.abspath(args.csv)), exist_ok=True)
        report.to_dataframe().to_csv(args.csv, index=False, encoding="utf-8-sig")

    if args.json:
        _emit(
            {
                "all_passed": report.all_passed,
                "total": len(report.entries),
                "failures": [f.__dict__ for f in report.failures()],
            },
            True,
        )
    else:
        for name, (ok, total) in report.summary().items():
            mark = "✓" if ok == total else "✗"
            print(f"{mark} {name}: {ok}/{total}")
        for failure in report.failures():
            print(f"  失败 {failure.identity} [{failure.params}] {failure.detail}")
    return EXIT_OK if report.all_passed else EXIT_DOMAIN_ERROR


def cmd_forget(args) -> int:
    result = forget_strand(parse_word(args.word, args.n), args.strand)
    _emit({"n": result.n, "word": format_word(result)} if args.json else format_word(result), args.json)
    return EXIT_OK


def cmd_lift(args) -> int:
    word = lift_permutation(Permutation(tuple(args.images)))
    _emit({"n": word.n, "word": format_word(word)} if args.json else format_word(word), args.json)
    return EXIT_OK


def cmd_sample(args) -> int:
    config = SamplingConfig(seed=args.seed, max_length=args.max_length, samples=args.count)
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        print(format_word(random_word(args.n, rng.randint(0, config.max_length), rng)))
    return EXIT_OK


# ============================================================================
# 解析器
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="弦数（缺省取 1 + 最大下标）")
    common.add_argument("--json", action="store_true", help="以 JSON 输出")

    parser = argparse.ArgumentParser(prog="braid-engine", description="辫群字问题与非双序证书")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="Garside 正规形")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("eq", parents=[common], help="判定两个字是否相等")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("trivial", parents=[common], help="判定是否为单位元")
    p.add_argument("word")
    p.add_argument("--method", choices=["garside", "handle"], default="garside")
    p.set_defaults(func=cmd_trivial)

    p = sub.add_parser("perm", parents=[common], help="置换 π(w)")
    p.add_argument("words", nargs="*")
    p.add_argument("--images", action="store_true", help="输出单行像而非轮换记号")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("cycle-type", parents=[common], help="π(w) 的轮换类型")
    p.add_argument("word")
    p.set_defaults(func=cmd_cycle_type)

    p = sub.add_parser("exp", parents=[common], help="指数和")
    p.add_argument("word")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("cmp", parents=[common], help="比较两个辫")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--order", choices=["dehornoy", "partial"], default="dehornoy")
    p.set_defaults(func=cmd_cmp)

    p = sub.add_parser("subgroup", parents=[common], help="中间子群 H_β")
    p.add_argument("action", choices=["member", "canon", "export", "list"])
    p.add_argument("word", nargs="?", default="")
    p.add_argument("--beta", default="")
    p.add_argument("--type", default="", help="轮换类型，例如 3,2")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("witness", parents=[common], help="构造并验证非双序证书")
    p.add_argument("--beta", default=None)
    p.add_argument("--infinite", action="store_true", help="将 β 视为 B_∞ 中的元素")
    p.add_argument("--scan", type=int, default=None, help="扫描 B_n 的全部非纯轮换类型")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--quiet", action="store_true", help="不显示进度条")
    p.add_argument("--verify-file", default=None, help="重新验证 witness --json 的输出")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("identities", parents=[common], help="恒等式验证套件")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--skip-noncommutation", action="store_true")
    p.add_argument("--csv", default=None, help="报告输出路径")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("forget", parents=[common], help="遗忘第 i 条弦")
    p.add_argument("word")
    p.add_argument("--strand", type=int, required=True)
    p.set_defaults(func=cmd_forget)

    p = sub.add_parser("lift", parents=[common], help="置换的正提升")
    p.add_argument("images", type=int, nargs="+", help="单行像，例如 3 1 2")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("sample", help="随机辫字（可复现）")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-length", type=int, default=16)
    p.add_argument("--seed", type=int, default=settings.engine_config["random_seed"])
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_PARSE_ERROR

    try:
        return args.func(args)
    except WordSyntaxError as e:
        print(f"解析错误: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (ValueError, RuntimeError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except OSError as e:
        print(f"文件错误: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
