"""Exact independent domination and bondage tools for plane graphs."""

from .bondage import BondageResult, EmptyGraph, bondage_i, priddy_wei_bound, priddy_wei_value
from .certifier import (
    AttachmentCheck,
    BondageCertificate,
    CertificationError,
    MissingExternalNeighbor,
    NoConfiguration,
    NoRecipe,
    SearchExhausted,
    WitnessMismatch,
    build_attachment,
    certify,
    certify_edge_config,
    certify_vertex_config,
    lemma2_check,
    verify_certificate,
)
from .configurations import (
    ConfigurationWitness,
    detect_all,
    detect_edge_configs,
    detect_vertex_configs,
    find_configuration,
)
from .discharging import AuditReport, ChargeState, SchemeMismatch, apply_rules, audit, initial_charges
from .domination import DominatingSetWitness, gamma, gamma_i, is_dominating, is_independent
from .generators import corpus, generate
from .graph import Face, FanWitness, GraphError, PlaneGraph, build, delete_edges, find_fan, from_faces
from .plg import format_plg, parse_plg, read_plg, write_plg

__all__ = [name for name in dir() if not name.startswith("_")]
