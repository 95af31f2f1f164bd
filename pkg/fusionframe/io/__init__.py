from .schemas import (
    FrameFile, SubspaceWitnessModel, PropertySReport, OnePSCertificateModel, CertificateReport,
    CriticalPointModel, TightnessReport, SpectraReport, AdmissibilityReport, RunManifest, RunSummary,
    ReproductionSummary
)
from .files import (
    encode_matrix, decode_matrix, frame_to_model, frame_from_model, write_frame, read_frame,
    write_trace_csv, read_trace_csv, write_json, TRACE_COLUMNS
)
from .reports import witness_to_model, property_s_to_model, certificate_to_model, critical_to_model

__all__ = [
    'FrameFile', 'SubspaceWitnessModel', 'PropertySReport', 'OnePSCertificateModel', 'CertificateReport',
    'CriticalPointModel', 'TightnessReport', 'SpectraReport', 'AdmissibilityReport', 'RunManifest', 'RunSummary',
    'ReproductionSummary',
    'encode_matrix', 'decode_matrix', 'frame_to_model', 'frame_from_model', 'write_frame', 'read_frame',
    'write_trace_csv', 'read_trace_csv', 'write_json', 'TRACE_COLUMNS',
    'witness_to_model', 'property_s_to_model', 'certificate_to_model', 'critical_to_model'
]
