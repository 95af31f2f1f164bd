from .plucker import PluckerVector, plucker_embed, minor_vector
from .property_s import (
    PropertySStatus, SubspaceWitness, PropertySResult, check_property_S, evaluate_subspace, intersection_dim
)
from .instability import OnePSCertificate, instability_certificate, apply_one_parameter_subgroup, welch_gap

__all__ = [
    'PluckerVector', 'plucker_embed', 'minor_vector',
    'PropertySStatus', 'SubspaceWitness', 'PropertySResult', 'check_property_S', 'evaluate_subspace',
    'intersection_dim',
    'OnePSCertificate', 'instability_certificate', 'apply_one_parameter_subgroup', 'welch_gap'
]
