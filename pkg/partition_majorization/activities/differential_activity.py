from typing import List

from temporalio import activity
from temporalio.exceptions import ApplicationError

from ..errors import InputError
from ..oracle import run_differential_batch
from ..schemas.types import FuzzBatchRequest, FuzzInstanceResult

@activity.defn
async def differential_batch_activity(request: FuzzBatchRequest) -> List[FuzzInstanceResult]:
    """Run engine-versus-oracle checks on one batch of seeded random instances"""
    first = request["start_index"]
    activity.logger.info(f"[Fuzz] Batch {first}..{first + request['count'] - 1} (seed {request['seed']})")

    try:
        results = run_differential_batch(request)
    except InputError as e:
        activity.logger.error(f"[Fuzz] Rejected batch starting at {first}: {e}")
        raise ApplicationError(f"Invalid fuzz batch: {e}", type=type(e).__name__, non_retryable=True)
    except Exception as e:
        activity.logger.error(f"[Fuzz] Batch starting at {first} failed: {e}")
        raise ApplicationError(f"Differential batch failed: {e}", type=type(e).__name__)

    disagreements = sum(1 for r in results if not r["agree"])
    activity.logger.info(f"[Fuzz] Batch starting at {first} done, {disagreements} disagreements")
    return results
