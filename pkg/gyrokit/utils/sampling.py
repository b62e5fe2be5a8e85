"""
-*- coding: utf-8 -*-
@FileName: sampling.py
@DateTime: 2025/10/18
@Docs: 可复现的随机采样与分片并行

所有随机检查都显式接收种子；分片种子由 numpy SeedSequence.spawn 派生，
结果只依赖 (seed, workers)。
"""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from gyrokit.core.exceptions import InputException


def spawn_seeds(seed: int, count: int) -> list[np.random.SeedSequence]:
    """从一个种子派生 count 个独立的子种子序列"""
    if seed < 0:
        raise InputException(f"随机种子必须非负: {seed}")
    return np.random.SeedSequence(seed).spawn(count)


def split_samples(samples: int, workers: int) -> list[int]:
    """把样本数尽量均匀地分给各个分片（不产生空分片）"""
    if workers < 1:
        raise InputException(f"分片数必须为正整数: {workers}")
    workers = max(1, min(workers, samples))
    base, extra = divmod(samples, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def run_partitioned[T](
    seed_seq: np.random.SeedSequence,
    samples: int,
    workers: int,
    task: Callable[[np.random.Generator, int], T],
) -> list[T]:
    """分片执行采样任务

    Args:
        seed_seq: 本任务的种子序列
        samples: 总样本数
        workers: 分片数
        task: (rng, 分片样本数) -> 分片结果

    Returns:
        按分片顺序排列的结果列表
    """
    chunks = split_samples(samples, workers)
    rngs = [np.random.default_rng(child) for child in seed_seq.spawn(len(chunks))]
    if len(chunks) == 1:
        return [task(rngs[0], chunks[0])]
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        return list(pool.map(task, rngs, chunks))
