"""
Runner — executes a list of Requests and collects Results in input order.

Commands are pure and CPU-bound, so they are pushed onto a thread pool with
loop.run_in_executor and awaited together; gather() keeps the input order, so
the report never depends on which request finished first.

The command handlers are injected by cli.py; the runner knows nothing about
what a command computes.
"""

import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from .errors import BudgetExceededError, ConsistencyError
from .request import (
    STATUS_ERROR,
    STATUS_FAILED,
    STATUS_INCONSISTENT,
    STATUS_OK,
    CommandContext,
    CommandOutcome,
    Request,
    Result,
)
from ..utils.log import get_logger

log = get_logger(__name__)

Handler = Callable[[dict, CommandContext], CommandOutcome]


class Runner:

    def __init__(self, handlers: dict[str, Handler], context: CommandContext, workers: int = 4):
        if workers < 1:
            raise ValueError(f"worker count must be >= 1, got {workers}")
        self._handlers = handlers
        self._context = context
        self._workers = workers

    # ------------------------------------------------------------------
    # One request
    # ------------------------------------------------------------------

    def run_one(self, index: int, request: Request) -> Result:
        tag = f"[request={index} {request.command}]"
        handler = self._handlers.get(request.command)
        if handler is None:
            return Result(index, request.command, request.params, STATUS_ERROR,
                          {"error": f"no handler for {request.command!r}"})
        log.info(f"{tag} started {request.params}")
        try:
            outcome = handler(request.params, self._context)
        except ValueError as e:
            log.warning(f"{tag} invalid parameters: {e}")
            return Result(index, request.command, request.params, STATUS_ERROR, {"error": str(e)})
        except BudgetExceededError as e:
            log.warning(f"{tag} {e}")
            return Result(index, request.command, request.params, STATUS_ERROR, {"error": str(e)},
                          [{"kind": "budget", "message": str(e)}])
        except ConsistencyError as e:
            log.error(f"{tag} routes disagree: {e}")
            body = {"error": str(e)}
            if e.report is not None:
                body["report"] = e.report.to_dict()
            return Result(index, request.command, request.params, STATUS_INCONSISTENT, body)
        except Exception as e:
            log.error(f"{tag} unexpected failure: {e}", exc_info=e)
            return Result(index, request.command, request.params, STATUS_ERROR,
                          {"error": f"internal error: {e}"})

        status = STATUS_FAILED if outcome.failed else STATUS_OK
        log.info(f"{tag} finished with status {status}")
        return Result(index, request.command, request.params, status, outcome.result, outcome.warnings)

    # ------------------------------------------------------------------
    # Many requests
    # ------------------------------------------------------------------

    async def run_all(self, requests: list[Request]) -> list[Result]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self._workers, thread_name_prefix="hodgekit") as pool:
            futures = [
                loop.run_in_executor(pool, self.run_one, index, request)
                for index, request in enumerate(requests)
            ]
            return list(await asyncio.gather(*futures))

    def run(self, requests: list[Request]) -> list[Result]:
        if not requests:
            return []
        if len(requests) == 1 or self._workers == 1:
            return [self.run_one(i, r) for i, r in enumerate(requests)]
        return asyncio.run(self.run_all(requests))
