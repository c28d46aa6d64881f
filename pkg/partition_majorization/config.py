import logging
import os
from dotenv import load_dotenv

# Load environment variables at module level
load_dotenv()

class Config:
    """Configuration settings for the majorization engine"""

    # Oracle Configuration
    ORACLE_MAX_CANDIDATES = int(os.getenv("ORACLE_MAX_CANDIDATES", "10000000"))
    ORACLE_WINDOW_SLACK = int(os.getenv("ORACLE_WINDOW_SLACK", "1"))

    # Fuzz Configuration
    FUZZ_BATCH_SIZE = int(os.getenv("FUZZ_BATCH_SIZE", "50"))
    FUZZ_DUMP_DIR = os.getenv("FUZZ_DUMP_DIR", ".")

    # Logging Configuration
    LOG_LEVEL = os.getenv("MAJORIZATION_LOG_LEVEL", "WARNING")

    # Temporal Configuration
    TEMPORAL_HOST = os.getenv("TEMPORAL_HOST", "localhost:7233")
    FUZZ_TASK_QUEUE = "partition-majorization-fuzz-queue"

    @classmethod
    def configure_logging(cls) -> None:
        """Install a stderr handler at the configured level"""
        logging.basicConfig(
            level=getattr(logging, cls.LOG_LEVEL.upper(), logging.WARNING),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
