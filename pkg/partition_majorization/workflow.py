import asyncio
from datetime import timedelta
from typing import List

from temporalio import workflow
from temporalio.common import RetryPolicy

with workflow.unsafe.imports_passed_through():
    from .activities.differential_activity import differential_batch_activity
    from .oracle import batch_requests
    from .schemas.types import FuzzInstanceResult, FuzzRequest

@workflow.defn
class FuzzSweepWorkflow:
    """Engine-versus-oracle sweep over seeded random instances"""

    @workflow.run
    async def run(self, request: FuzzRequest) -> List[FuzzInstanceResult]:
        """Fan the sweep out into parallel batch activities, results ordered by instance index"""
        workflow.logger.info(f"Starting fuzz sweep: {request['instances']} instances, seed {request['seed']}")

        batches = batch_requests(
            request["instances"],
            request["max_len"],
            request["min_val"],
            request["max_val"],
            request["seed"],
            request["batch_size"],
        )
        batch_activities = [
            workflow.execute_activity(
                differential_batch_activity,
                batch,
                start_to_close_timeout=timedelta(minutes=30),
                retry_policy=RetryPolicy(maximum_attempts=2),
            )
            for batch in batches
        ]
        batch_results = await asyncio.gather(*batch_activities)

        results = sorted((r for batch in batch_results for r in batch), key=lambda r: r["index"])
        workflow.logger.info(f"Fuzz sweep completed: {sum(1 for r in results if not r['agree'])} disagreements")
        return results
