import sys
from pathlib import Path

#modules import each other from the repository root, like the scripts do
sys.path.insert(0, str(Path(__file__).parent))
