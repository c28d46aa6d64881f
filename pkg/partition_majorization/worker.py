import asyncio
from temporalio.client import Client
from temporalio.worker import Worker
from temporalio.worker.workflow_sandbox import SandboxedWorkflowRunner, SandboxRestrictions

from .config import Config
from .workflow import FuzzSweepWorkflow
from .activities.differential_activity import differential_batch_activity

async def run_fuzz_worker() -> None:
    """Run the fuzz sweep worker"""
    client = await Client.connect(Config.TEMPORAL_HOST)

    # The workflow imports the batch planner, which pulls in the engine
    restrictions = SandboxRestrictions.default.with_passthrough_modules(
        "partition_majorization",
        "langgraph",
        "pydantic",
    )

    worker = Worker(
        client,
        task_queue=Config.FUZZ_TASK_QUEUE,
        workflows=[FuzzSweepWorkflow],
        activities=[differential_batch_activity],
        workflow_runner=SandboxedWorkflowRunner(restrictions=restrictions)
    )

    print(f"🧮 Partition Majorization Fuzz Worker started")
    print(f"📡 Temporal Host: {Config.TEMPORAL_HOST}")
    print(f"📋 Task Queue: {Config.FUZZ_TASK_QUEUE}")
    print(f"🔎 Oracle cap: {Config.ORACLE_MAX_CANDIDATES:,} candidates, window slack {Config.ORACLE_WINDOW_SLACK}")
    print(f"🔓 Sandbox: Configured with passthrough modules")
    print("=" * 60)

    await worker.run()

if __name__ == "__main__":
    Config.configure_logging()
    asyncio.run(run_fuzz_worker())
