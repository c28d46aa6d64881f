"""
Main entry point for partition_majorization package

Usage:
    python -m partition_majorization check --mode exact --input instance.json --emit-witness
    python -m partition_majorization oracle --mode weak --input instance.json
    python -m partition_majorization fuzz --instances 1000 --max-len 3 --max-val 3 --seed 0
    python -m partition_majorization worker
"""

from .cli import main

if __name__ == "__main__":
    main()
