import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterable, List, Tuple

__license__ = "GNU General Public License v3.0"
__version__ = "0.3.0"


class PlotSerializer:
    def __init__(self, directory: str,
                 name_creator: Callable[[str, List[str]], Iterable[str]]):
        self._directory = directory
        self._filename_creator = name_creator

    @classmethod
    def new_instance(cls, output_dir: str,
                     filename_creator: Callable[[str, List[str]],
                                                Iterable[str]]
                     ) -> 'PlotSerializer':
        """
        Creates a new instance of a PlotSerializer and returns it.
        :param output_dir: Path where to save the plots. If it doesn't exist is
        created automatically.
        :param filename_creator: A creator of an iterator for unique names for
        each plot file.
        :return: A PlotSerializer instance.
        """
        if not os.path.isdir(output_dir):
            os.makedirs(output_dir)
        return PlotSerializer(output_dir, filename_creator)

    def serialize_series(self,
                         series: List[Tuple[str, Dict[str, List[int]]]]
                         ) -> List[str]:
        """
        Draws one figure per entry, one line per named rank vector.
        :param series: Pairs of figure name and rank vectors by label.
        :return: The names of the figures written.
        """
        names = [name for name, _ in series]
        figures_names = list(self._filename_creator(self._directory, names))

        # runs it on a different process in order to avoid problem if plotting
        # is not done on main thread
        with ProcessPoolExecutor() as pool:
            futures = [
                pool.submit(plotting_function, vectors, figure_name)
                for (_, vectors), figure_name in zip(series, figures_names)
            ]
            for future in futures:
                future.result(timeout=100)
        return figures_names


def plotting_function(vectors: Dict[str, List[int]], figure_name: str):
    try:
        # to do in order to avoid the use of an X-server
        import matplotlib
        matplotlib.use("Agg")

        import matplotlib.pyplot as plt
        plt.figure()
        plt.xlabel("degree")
        plt.ylabel("rank")
        plt.yscale("symlog")
        for label, values in vectors.items():
            plt.plot(range(1, len(values) + 1), values, marker="o",
                     label=label)
        plt.legend()
        plt.savefig(figure_name)
        plt.close()
    except Exception:
        logging.getLogger(__name__).exception("Matplotlib exception")
