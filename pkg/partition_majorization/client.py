import asyncio
import uuid
from typing import List

from temporalio.client import Client

from .config import Config
from .workflow import FuzzSweepWorkflow
from .schemas.types import FuzzInstanceResult, FuzzRequest

async def start_fuzz_workflow(request: FuzzRequest) -> List[FuzzInstanceResult]:
    """Start a distributed fuzz sweep and wait for its results"""
    client = await Client.connect(Config.TEMPORAL_HOST)

    print(f"🧮 Starting fuzz sweep: {request['instances']} instances, seed {request['seed']}")
    print(f"📊 Configuration: max length {request['max_len']}, values {request['min_val']}..{request['max_val']}, batch size {request['batch_size']}")
    print(f"📡 Temporal Host: {Config.TEMPORAL_HOST}")
    print(f"📋 Task Queue: {Config.FUZZ_TASK_QUEUE}")
    print("=" * 80)

    try:
        results: List[FuzzInstanceResult] = await client.execute_workflow(
            FuzzSweepWorkflow.run,
            request,
            id=f"majorization-fuzz-{request['seed']}-{uuid.uuid4()}",
            task_queue=Config.FUZZ_TASK_QUEUE,
        )
    except Exception as e:
        print(f"❌ Error: {e}")
        raise

    disagreements = [r for r in results if not r["agree"]]
    print("\n" + "=" * 80)
    print("🎉 FUZZ SWEEP COMPLETED!")
    print("=" * 80)
    print(f"📈 Instances: {len(results)}")
    print(f"{'❌' if disagreements else '✅'} Disagreements: {len(disagreements)}")
    print(f"🚨 Hard failures: {sum(1 for r in results if r['hard_failure'])}")
    return results

async def main() -> None:
    """Main function for command line usage"""
    import sys

    if len(sys.argv) < 2:
        print("Partition Majorization Fuzz Client Usage:")
        print("  python -m partition_majorization.client <instances> [max_len] [max_val] [seed]")
        print("\nExamples:")
        print("  python -m partition_majorization.client 1000")
        print("  python -m partition_majorization.client 10000 5 6 42")
        sys.exit(1)

    request = FuzzRequest(
        instances=int(sys.argv[1]),
        max_len=int(sys.argv[2]) if len(sys.argv) > 2 else 3,
        min_val=0,
        max_val=int(sys.argv[3]) if len(sys.argv) > 3 else 3,
        seed=int(sys.argv[4]) if len(sys.argv) > 4 else 0,
        batch_size=Config.FUZZ_BATCH_SIZE,
    )
    await start_fuzz_workflow(request)

if __name__ == "__main__":
    asyncio.run(main())
