import os
import sys

# modules import each other from the source directory, as the scripts do
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                "source"))
