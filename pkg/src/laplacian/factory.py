"""
Laplacian Factory for building Laplacians by framework name
"""
from typing import List

from config.settings import settings
from src.hypergraph.core import Hypergraph
from src.laplacian.frameworks import (
    LaplacianMatrix,
    clique_expansion,
    star_expansion,
    zhou_laplacian,
)
from src.utils.errors import ConfigurationError
from src.utils.logger import app_logger


class LaplacianFactory:
    """Factory class for creating hypergraph Laplacians"""

    _BUILDERS = {
        "zhou": zhou_laplacian,
        "clique": clique_expansion,
        "star": star_expansion,
    }

    @staticmethod
    def create_laplacian(framework: str, g: Hypergraph) -> LaplacianMatrix:
        """
        Create a Laplacian for the given framework

        Args:
            framework: zhou/clique/star
            g: Weighted hypergraph

        Returns:
            LaplacianMatrix
        """
        name = framework.strip().lower()
        builder = LaplacianFactory._BUILDERS.get(name)
        if builder is None:
            raise ConfigurationError(f"Unsupported framework: {framework}")

        app_logger.debug(
            f"[LAPLACIAN] building '{name}' for {g.num_vertices} vertices, {g.num_hyperedges} hyperedges"
        )
        return builder(g)

    @staticmethod
    def get_framework_list() -> List[str]:
        """Get list of available frameworks"""
        return list(settings.FRAMEWORKS)
