"""
Assignment of fuzz trials to workers.
Implements round-robin and least-loaded assignment strategies.
"""

from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar("T")


def assign_worker(loads: Sequence[float], method: str = "round_robin", position: int = 0) -> int:
    """
    Pick the worker for the next task.

    Args:
        loads: Accumulated cost per worker
        method: "round_robin" or "least_loaded"
        position: Index of the task in submission order

    Returns:
        Worker index
    """
    if not loads:
        raise ValueError("no workers to assign to")
    if method == "least_loaded":
        # Ties go to the lowest index so the assignment is reproducible
        return min(range(len(loads)), key=lambda w: (loads[w], w))
    if method != "round_robin":
        raise ValueError(f"unknown assignment method: {method}")
    return position % len(loads)


def partition_tasks(
    tasks: Sequence[T],
    workers: int,
    method: str = "round_robin",
    cost: Optional[Callable[[T], float]] = None,
) -> List[List[T]]:
    """
    Split tasks into one batch per worker.

    Returns:
        A list of batches; empty batches are dropped
    """
    workers = max(1, workers)
    batches: List[List[T]] = [[] for _ in range(workers)]
    loads = [0.0] * workers
    for position, task in enumerate(tasks):
        w = assign_worker(loads, method, position)
        batches[w].append(task)
        loads[w] += cost(task) if cost is not None else 1.0
    return [batch for batch in batches if batch]
