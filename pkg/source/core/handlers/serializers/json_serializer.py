import json
import logging
import os
import sys
from typing import Dict, Optional

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class JSONSerializer:
    """
    This class represents a serializer of documents in JSON. Keys keep their
    insertion order, so equal documents always give equal bytes.
    """

    def __init__(self, filename: Optional[str]):
        self._filename = filename
        self._indent = 2

    @classmethod
    def new_instance(cls, filename: Optional[str] = None) -> 'JSONSerializer':
        """
        Creates a new instance of a JSONSerializer.
        :param filename: Path of the output file. Its directory is created if
        it doesn't exist. None means the standard output.
        :return: An instance of JSONSerializer.
        """
        if filename is not None:
            directory = os.path.dirname(filename)
            if directory != "" and not os.path.isdir(directory):
                os.makedirs(directory)
        return JSONSerializer(filename)

    def to_text(self, document: Dict) -> str:
        return json.dumps(document, indent=self._indent) + "\n"

    def serialize_document(self, document: Dict):
        text = self.to_text(document)
        if self._filename is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        with open(self._filename, "w") as output:
            output.write(text)
        logging.getLogger(__name__).info(
            "Created file {}".format(self._filename)
        )
