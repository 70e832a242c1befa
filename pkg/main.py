"""
PreventKit - command-line entry point.

    python main.py <subcommand> [options]
"""
import sys
from pathlib import Path

# Add the repository root to the path for imports
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.main import main


if __name__ == "__main__":
    main()
