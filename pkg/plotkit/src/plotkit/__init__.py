"""Chart rendering for deplen plot-data CSVs."""

from .render import (PlotDataError, PlotSpec, build_figure, read_plot_data,
                     render)

__all__ = ["PlotDataError", "PlotSpec", "build_figure", "read_plot_data",
           "render"]
