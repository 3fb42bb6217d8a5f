"""
运行全部验证场景

一键运行：
1. 恒等式验证套件（n ≤ 7）
2. 不交换性套件（n ≤ 6）
3. 非纯轮换类型的证书扫描（n = 3..6）
4. S_n 子群（共轭类）的证书扫描（n = 3..5）
"""

import os
import sys
from datetime import datetime

import pandas as pd

# 添加项目根目录到 path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.analysis.torsion_witness import (
    scan_cycle_types,
    scan_intermediate_subgroups,
    scan_to_dataframe,
)
from src.analysis.word_problem import run_identity_suite, run_noncommutation_suite
from src.config.models import IdentitySuiteConfig, WitnessScanConfig
from src.settings import settings


def _save(df: pd.DataFrame, name: str) -> str:
    reports_dir = settings.report_config["reports_dir"]
    os.makedirs(reports_dir, exist_ok=True)
    path = os.path.join(reports_dir, name)
    df.to_csv(path, index=False, encoding="utf-8-sig")
    return path


def identities_main(config: IdentitySuiteConfig = IdentitySuiteConfig()) -> bool:
    print(f"\n[1/2] 恒等式验证 (n_max = {config.n_max})...")
    report = run_identity_suite(config.n_max)
    if config.include_noncommutation:
        print(f"[2/2] 不交换性验证 (n_max = {min(config.n_max, 6)})...")
        report.entries.extend(run_noncommutation_suite(min(config.n_max, 6)).entries)

    for name, (ok, total) in report.summary().items():
        print(f"  {'✓' if ok == total else '✗'} {name}: {ok}/{total}")
    print(f"报告已保存至: {_save(report.to_dataframe(), 'identity_suite_report.csv')}")
    return report.all_passed


def cycle_type_scan_main(ns=(3, 4, 5, 6)) -> bool:
    frames = []
    passed = True
    for n in ns:
        results = scan_cycle_types(n, WitnessScanConfig(n=n, show_progress=True))
        print(f"  n = {n}: {sum(r.passed for r in results)}/{len(results)} 个轮换类型通过")
        passed &= all(r.passed for r in results)
        frames.append(scan_to_dataframe(results))
    print(f"报告已保存至: {_save(pd.concat(frames, ignore_index=True), 'cycle_type_scan_report.csv')}")
    return passed


def subgroup_scan_main(ns=(3, 4, 5)) -> bool:
    frames = []
    passed = True
    for n in ns:
        results = scan_intermediate_subgroups(n, WitnessScanConfig(n=n, show_progress=True))
        print(f"  n = {n}: {sum(r.passed for r in results)}/{len(results)} 个子群类通过")
        passed &= all(r.passed for r in results)
        frames.append(scan_to_dataframe(results))
    print(f"报告已保存至: {_save(pd.concat(frames, ignore_index=True), 'subgroup_scan_report.csv')}")
    return passed


def main():
    start_time = datetime.now()

    print("\n" + "=" * 80)
    print("辫群非双序验证套件")
    print(f"开始时间: {start_time.strftime('%Y-%m-%d %H:%M:%S')}")
    print("=" * 80)

    analyses = [
        ("恒等式与不交换性验证", identities_main),
        ("非纯轮换类型证书扫描", cycle_type_scan_main),
        ("S_n 子群证书扫描", subgroup_scan_main),
    ]

    results = {}

    for name, func in analyses:
        print(f"\n{'=' * 80}")
        print(f"正在执行: {name}")
        print("=" * 80)

        try:
            ok = func()
            results[name] = "✓ 成功" if ok else "✗ 存在失败项"
        except Exception as e:
            print(f"\n错误: {str(e)}")
            import traceback

            traceback.print_exc()
            results[name] = f"✗ 失败: {str(e)}"

    end_time = datetime.now()
    duration = (end_time - start_time).total_seconds()

    print("\n" + "=" * 80)
    print("验证完成总结")
    print("=" * 80)
    print(f"结束时间: {end_time.strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"总耗时: {duration:.2f} 秒")
    print("\n验证结果:")
    for name, status in results.items():
        print(f"  {status} - {name}")
    print(f"\n所有报告已保存至 {settings.report_config['reports_dir']} 目录")
    print("=" * 80 + "\n")


if __name__ == "__main__":
    main()
