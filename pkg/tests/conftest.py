import sys
from pathlib import Path

# let tests import the shared oracle and generator helpers
sys.path.insert(0, str(Path(__file__).parent))
