# -*- coding: utf-8 -*-
#
# Copyright © 2023 The hsigma developers
#
# This library is free software; you can redistribute it and/or modify it under
# the terms of the GNU Lesser General Public License as published by the Free
# Software Foundation; either version 2.1 of the License, or (at your option)
# any later version.
#
# This library is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more
# details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""
Corpus sweeps: one task per (entry, σ, check), run serially or on a
process pool, reported in task order.
"""

import functools
import multiprocessing
import traceback
from dataclasses import dataclass, field
from typing import Optional

from hsigma.core.bounds import Bounds
from hsigma.core.exceptions import HsigmaException, LatticeBoundExceeded
from hsigma.core.partition import PrimePartition, parse_partition
from hsigma.corpus.manifest import (
    EXPECTED, CorpusEntry, build_corpus_entry, expectations_report)
from hsigma.harness.checks import run_check
from hsigma.harness.lemmas import LemmaBudget
from hsigma.harness.reports import TheoremReport, Timings
from hsigma.utils import faults
from hsigma.utils.loggable import debug
from hsigma.utils.signals import Signal

FINEST_SPEC = PrimePartition(finest=True).render()


@dataclass(frozen=True)
class SweepTask:
    """Everything a worker needs, bounds included"""
    index: int
    entry: object
    check: str
    sigma: Optional[str]
    include_classical: bool = True
    base_dir: Optional[str] = None
    bounds: tuple = ()
    timings: bool = False
    budget: LemmaBudget = field(default_factory=LemmaBudget)
    verbose: bool = False


@dataclass
class TaskResult:
    """What comes back from a worker"""
    index: int
    entry_name: str
    check: str
    sigma: Optional[str]
    reports: list = field(default_factory=list)
    failure: Optional[str] = None
    trace: Optional[str] = None

    @property
    def violated(self):
        return any(r['equivalent'] is False for r in self.reports)


def build_tasks(entries, checks=None, base_dir=None, budget=None,
                verbose=False):
    """
    Expand @entries into tasks.

    Args:
        checks: list, restricts every entry's checks when given.

    The degeneration suite runs once per entry at the finest partition,
    the finest-partition corollaries once per entry.
    """
    tasks = []
    for entry in entries:
        wanted = entry.tasks()
        if checks:
            wanted = [c for c in wanted if c in checks]
        for check in wanted:
            if check == EXPECTED:
                sigmas = [None]
            elif check == 'degeneration':
                sigmas = [FINEST_SPEC] if entry.spec else []
            else:
                sigmas = entry.sigma if entry.spec else []
            for position, sigma in enumerate(sigmas):
                tasks.append(SweepTask(
                    index=len(tasks), entry=entry, check=check, sigma=sigma,
                    include_classical=position == 0, base_dir=base_dir,
                    bounds=Bounds.snapshot(), timings=Timings.enabled,
                    budget=budget or LemmaBudget(), verbose=verbose))
    return tasks


# tasks arrive grouped by entry
BUILT_CACHE_SIZE = 4


@functools.lru_cache(maxsize=BUILT_CACHE_SIZE)
def _build(name, spec, base_dir):
    return build_corpus_entry(CorpusEntry(name, spec), base_dir)


def _built_entry(task):
    return _build(task.entry.name, task.entry.spec, task.base_dir)


def run_task(task):
    """
    Run one task; called in worker processes.

    Returns:
        TaskResult
    """
    if task.bounds:
        Bounds.configure(*task.bounds)
    Timings.enabled = task.timings

    entry = task.entry
    result = TaskResult(task.index, entry.name, task.check, task.sigma)
    spec = entry.spec or entry.name
    try:
        built = _built_entry(task)
    except HsigmaException as err:
        result.failure = 'Could not build %s: %s' % (spec, err.message)
        return result
    except Exception as err:  # pylint: disable=broad-except
        result.failure = 'Could not build %s: %r' % (spec, err)
        result.trace = traceback.format_exc()
        return result

    with faults.injected_fault(entry.fault):
        try:
            if task.check == EXPECTED:
                reports = [expectations_report(entry, built)]
            else:
                reports = run_check(
                    task.check, parse_partition(task.sigma), built.table,
                    budget=task.budget, group_spec=spec,
                    verbose=task.verbose, skip_not_sigma_full=True,
                    include_classical=task.include_classical)
        except LatticeBoundExceeded as err:
            reports = [TheoremReport(task.check, spec, task.sigma,
                                     skipped=err.message)]
        except HsigmaException as err:
            result.failure = '%s on %s: %s' % (task.check, spec, err.message)
            return result
        except Exception as err:  # pylint: disable=broad-except
            result.failure = '%s on %s crashed: %r' % (task.check, spec, err)
            result.trace = traceback.format_exc()
            return result

    result.reports = [r.to_json() for r in reports]
    debug('task %d (%s, %s, %s) done' % (task.index, entry.name, task.check,
                                          task.sigma), 'sweep')
    return result


class SweepRunner:
    """
    Runs tasks and hands each result to `task_done`, in task order
    whatever the completion order.
    """

    def __init__(self, jobs=1):
        self.jobs = max(1, jobs)
        self.task_done = Signal()

    def run(self, tasks):
        """
        Returns:
            list: of `TaskResult`, indexed like @tasks
        """
        results = []
        if self.jobs == 1 or len(tasks) < 2:
            for task in tasks:
                res = run_task(task)
                self.task_done(res)
                results.append(res)
            return results

        with multiprocessing.Pool(self.jobs) as pool:
            for res in pool.imap(run_task, tasks):
                self.task_done(res)
                results.append(res)
        return results
