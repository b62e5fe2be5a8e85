"""
-*- coding: utf-8 -*-
@FileName: cli.py
@DateTime: 2025/10/18
@Docs: 命令行入口

用法:
    gyrokit verify-axioms --model mobius --samples 10000 --seed 7 --tol 1e-9
    gyrokit validate-table --model table:tables/g8.json
    gyrokit build-metric --model mobius --r0 0.8 --depth 12 --out reports/metric.json
    gyrokit sandwich --model einstein --level 3
    gyrokit quotient --model group:tables/z4.json --sub 0,2
    gyrokit q-image --model table:tables/g8.json --pairs 1:1,6:7

报告 JSON 写到 stdout（--out 另存一份），日志写到 stderr。
退出码：0 全部通过，1 性质检查失败，2 输入错误。
"""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from gyrokit.core.config import settings
from gyrokit.core.exceptions import EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_PASS, GyroException, InputException
from gyrokit.core.gyrogroup import GyroModel
from gyrokit.models import (
    TableGyroModel,
    load_table,
    make_einstein,
    make_group_adapter,
    make_mobius,
    make_table_gyrogroup,
    validate_table,
)
from gyrokit.schemas.cli import RunConfig
from gyrokit.schemas.report import CheckReport, RunReport
from gyrokit.services.axioms import check_axioms, check_difference_identities
from gyrokit.services.neighborhood import build_chain
from gyrokit.services.prenorm import (
    DyadicFamily,
    build_dyadic_family,
    gyration_invariance_check,
    metric_axiom_check,
    metric_table,
    sandwich_check,
)
from gyrokit.services.subquotient import SubgyroCandidate, is_L_subgyrogroup, left_cosets, q_image, q_separation_check
from gyrokit.utils.export import METRIC_TABLE_COLUMNS, RHO_TABLE_COLUMNS, dump_json, write_csv, write_json
from gyrokit.utils.logger import log_function_calls, logger
from gyrokit.utils.sampling import spawn_seeds

# metric_table.csv 中连续模型的采样点对数
METRIC_TABLE_PAIRS = 32


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器"""
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description="陀螺群公理检查与预范数度量构造")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", default="mobius", help="mobius | einstein | table:PATH | group:PATH")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="随机种子")
    common.add_argument("--samples", type=int, default=settings.DEFAULT_SAMPLES, help="每条性质的样本数")
    common.add_argument("--tol", type=float, default=settings.DEFAULT_TOLERANCE, help="连续模型的容差")
    common.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS, help="并行分片数")
    common.add_argument("--out", type=Path, default=None, help="报告JSON另存路径")

    metric = argparse.ArgumentParser(add_help=False)
    metric.add_argument("--r0", type=float, default=0.8, help="邻域链首半径 r_0")
    metric.add_argument("--depth", type=int, default=12, help="二进族深度")
    metric.add_argument("--level", type=int, default=None, help="只检查这一层的夹逼包含")

    subparsers.add_parser("verify-axioms", parents=[common], help="检查陀螺群公理与差恒等式")
    subparsers.add_parser("validate-table", parents=[common], help="穷举验证Cayley表")
    build = subparsers.add_parser("build-metric", parents=[common, metric], help="构造预范数并检查度量公理")
    build.add_argument("--csv-dir", type=Path, default=None, help="CSV输出目录，默认与 --out 同目录")
    subparsers.add_parser("sandwich", parents=[common, metric], help="检查预范数的夹逼包含")
    quotient = subparsers.add_parser("quotient", parents=[common], help="验证 L-子陀螺群并输出左陪集")
    quotient.add_argument("--sub", required=True, help="子集 H 的元素标签，逗号分隔")
    q_img = subparsers.add_parser("q-image", parents=[common], help="差映射像集与分离性检查")
    q_img.add_argument("--pairs", default=None, help="元素对 a:b,c:d（有限模型）")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    return RunConfig.model_validate(values)


def load_model(cfg: RunConfig) -> GyroModel:
    """按选择器构造模型；有限模型先经过穷举验证"""
    if cfg.model == "mobius":
        return make_mobius(cfg.tol)
    if cfg.model == "einstein":
        return make_einstein(cfg.tol)
    table = load_table(cfg.model_path)
    if cfg.model_kind == "group":
        return make_group_adapter(table, name=cfg.model)
    return make_table_gyrogroup(table, name=cfg.model)


def _run_report(cfg: RunConfig, checks: list[CheckReport], **extra) -> RunReport:
    return RunReport(
        tool=settings.APP_NAME,
        version=settings.APP_VERSION,
        command=cfg.command,
        model=cfg.model,
        seed=cfg.seed,
        samples=cfg.samples,
        tolerance=0.0 if cfg.is_finite else cfg.tol,
        workers=cfg.workers,
        passed=all(check.passed for check in checks),
        checks=checks,
        **extra,
    )


def _check_kwargs(cfg: RunConfig) -> dict:
    return {"samples": cfg.samples, "seed": cfg.seed, "workers": cfg.workers}


@log_function_calls()
def cmd_verify_axioms(cfg: RunConfig) -> RunReport:
    """公理检查；Cayley表先做穷举验证，通过后再跑公理与差恒等式"""
    if cfg.model_kind == "table":
        table = load_table(cfg.model_path)
        validation = validate_table(table)
        if not validation.passed:
            return _run_report(cfg, [validation])
        m: GyroModel = TableGyroModel(table, name=cfg.model)
        checks = [validation]
    else:
        m = load_model(cfg)
        checks = []
    tol = None if m.is_finite else cfg.tol
    checks.append(check_axioms(m, tol=tol, **_check_kwargs(cfg)))
    checks.append(check_difference_identities(m, tol=tol, **_check_kwargs(cfg)))
    return _run_report(cfg, checks)


@log_function_calls()
def cmd_validate_table(cfg: RunConfig) -> RunReport:
    """只做 Cayley 表的穷举验证"""
    report = validate_table(load_table(cfg.model_path))
    return _run_report(cfg, [report])


def _family(cfg: RunConfig) -> DyadicFamily:
    return build_dyadic_family(build_chain(cfg.r0, cfg.depth), cfg.depth)


def _sandwich_levels(cfg: RunConfig) -> list[int]:
    if cfg.level is not None:
        return [cfg.level]
    return list(range(1, cfg.depth)) or [cfg.depth]


def _sandwich_report(cfg: RunConfig, f: DyadicFamily, m: GyroModel) -> CheckReport:
    children = [sandwich_check(f, m, n, **_check_kwargs(cfg)) for n in _sandwich_levels(cfg)]
    return CheckReport.aggregate("sandwich", children, seed=None if m.is_finite else cfg.seed)


def _metric_pairs(cfg: RunConfig, m: GyroModel) -> list[tuple]:
    if m.is_finite:
        return [(a, b) for a in m.elements() for b in m.elements()]
    rng = np.random.default_rng(spawn_seeds(cfg.seed, 1)[0])
    return [(m.sample(rng), m.sample(rng)) for _ in range(METRIC_TABLE_PAIRS)]


def _csv_dir(cfg: RunConfig) -> Path:
    if cfg.csv_dir is not None:
        return cfg.csv_dir
    if cfg.out is not None:
        return cfg.out.parent
    return Path.cwd()


@log_function_calls()
def cmd_build_metric(cfg: RunConfig) -> RunReport:
    """构造邻域链与二进族，导出 ρ 表与度量表，再检查审计、夹逼、度量公理与陀螺不变性"""
    m = load_model(cfg)
    f = _family(cfg)

    directory = _csv_dir(cfg)
    rho_path = write_csv(f.rho_rows(), directory / "rho_table.csv", RHO_TABLE_COLUMNS)
    metric_rows = metric_table(f, m, _metric_pairs(cfg, m))
    metric_path = write_csv(metric_rows, directory / "metric_table.csv", METRIC_TABLE_COLUMNS)

    tol = None if m.is_finite else cfg.tol
    checks = [
        f.audit(),
        _sandwich_report(cfg, f, m),
        metric_axiom_check(f, m, triples=cfg.samples, seed=cfg.seed, tol=tol, workers=cfg.workers),
        gyration_invariance_check(f, m, **_check_kwargs(cfg)),
    ]
    artifacts = {"rho_table": str(rho_path), "metric_table": str(metric_path)}
    return _run_report(cfg, checks, artifacts=artifacts)


@log_function_calls()
def cmd_sandwich(cfg: RunConfig) -> RunReport:
    """只检查夹逼包含（--level 指定单层，否则 1..depth-1）"""
    m = load_model(cfg)
    return _run_report(cfg, [_sandwich_report(cfg, _family(cfg), m)])


@log_function_calls()
def cmd_quotient(cfg: RunConfig) -> RunReport:
    """验证 H 为 L-子陀螺群后输出左陪集划分"""
    m = load_model(cfg)
    H = SubgyroCandidate.from_labels(m, cfg.sub or [])
    report = is_L_subgyrogroup(m, H)
    if not report.passed:
        return _run_report(cfg, [report])

    partition = left_cosets(m, H)
    result = {
        "subgroup": [partition.labels[h] for h in partition.subgroup],
        "representatives": [partition.labels[x] for x in partition.representatives],
        "blocks": partition.label_blocks(),
    }
    return _run_report(cfg, [report], result=result)


def _label_index(m: GyroModel, label: str) -> int:
    try:
        return m.index_of(label)
    except KeyError:
        raise InputException(f"未知元素标签: {label}", detail={"label": label}) from None


@log_function_calls()
def cmd_q_image(cfg: RunConfig) -> RunReport:
    """差映射像集（给出 --pairs 时）与分离性检查"""
    m = load_model(cfg)
    tol = None if m.is_finite else cfg.tol
    checks = [q_separation_check(m, tol=tol, **_check_kwargs(cfg))]
    if cfg.pairs is None:
        return _run_report(cfg, checks)

    pairs = [(_label_index(m, a), _label_index(m, b)) for a, b in cfg.pairs]
    image = q_image(m, pairs)
    result = {
        "image": [m.format(q) for q in image.elements],
        "contains_identity": image.contains_identity,
        "min_norm": image.min_norm,
    }
    return _run_report(cfg, checks, result=result)


COMMANDS: dict[str, Callable[[RunConfig], RunReport]] = {
    "verify-axioms": cmd_verify_axioms,
    "validate-table": cmd_validate_table,
    "build-metric": cmd_build_metric,
    "sandwich": cmd_sandwich,
    "quotient": cmd_quotient,
    "q-image": cmd_q_image,
}


def dump_error(e: GyroException) -> str:
    """错误对象 {code, message, detail} 的 JSON"""
    return json.dumps(e.to_dict(), ensure_ascii=False, indent=2, default=str)


def _emit_error(e: GyroException) -> int:
    logger.error(f"{e.message}: {e.detail}" if e.detail else e.message)
    print(dump_error(e))
    return e.exit_code


def run(argv: Sequence[str] | None = None) -> int:
    """解析参数、执行命令并输出报告

    Returns:
        退出码
    """
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValidationError as e:
        detail = [{"loc": list(err["loc"]), "msg": err["msg"], "type": err["type"]} for err in e.errors()]
        return _emit_error(GyroException("命令行参数错误", detail=detail, exit_code=EXIT_INPUT_ERROR))

    try:
        report = COMMANDS[cfg.command](cfg)
        if cfg.out is not None:
            write_json(report, cfg.out)
    except GyroException as e:
        return _emit_error(e)

    print(dump_json(report))
    if report.passed:
        logger.info(f"{cfg.command} 通过")
        return EXIT_PASS
    failed = [name for check in report.checks for name in check.failed_checks()]
    logger.warning(f"{cfg.command} 未通过: {failed}")
    return EXIT_FAILURE


def main() -> None:
    """控制台入口"""
    sys.exit(run())


if __name__ == "__main__":
    main()
