# run.py

import sys
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add the project root directory to the Python path so 'gacalc' imports
# as a top-level package when run from a checkout.
sys.path.insert(0, str(Path(__file__).resolve().parent))

from gacalc.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
