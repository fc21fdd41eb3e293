"""
Responses constants

Every error the engine reports. The exit code is the command line status,
the status code the HTTP one.
"""

from starlette import status

PARSE_EXIT_CODE = 2
DOMAIN_EXIT_CODE = 1

UNKNOWN_GROUP_DESCRIPTOR_ERROR = {
    "key": "unknown_group_descriptor_error_key",
    "message": "Unknown group descriptor.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

INVALID_GENERATOR_ERROR = {
    "key": "invalid_generator_error_key",
    "message": "Permutation generator is not a bijection of the points.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

GROUP_ORDER_CAP_EXCEEDED_ERROR = {
    "key": "group_order_cap_exceeded_error_key",
    "message": "Group order exceeds the configured cap.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

NOT_A_SUBGROUP_ERROR = {
    "key": "not_a_subgroup_error_key",
    "message": "Element set is not a subgroup.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

INVALID_CLASS_INDEX_ERROR = {
    "key": "invalid_class_index_error_key",
    "message": "Conjugacy class index out of range.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

NON_COMPOSABLE_MORPHISMS_ERROR = {
    "key": "non_composable_morphisms_error_key",
    "message": "Target of the first morphism is not the source of the second.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

CATEGORY_MISMATCH_ERROR = {
    "key": "category_mismatch_error_key",
    "message": "Coefficient systems live over different orbit categories.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

INVALID_WEYL_MODULE_ERROR = {
    "key": "invalid_weyl_module_error_key",
    "message": "Weyl module action is not a group homomorphism.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

INVALID_COEFFICIENT_SYSTEM_ERROR = {
    "key": "invalid_coefficient_system_error_key",
    "message": "Coefficient system data has inconsistent shapes.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

INVALID_COEFFICIENT_DESCRIPTOR_ERROR = {
    "key": "invalid_coefficient_descriptor_error_key",
    "message": "Invalid coefficient descriptor.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

INVALID_REPRESENTATION_DESCRIPTOR_ERROR = {
    "key": "invalid_representation_descriptor_error_key",
    "message": "Invalid representation descriptor.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

INVALID_REPRESENTATION_ERROR = {
    "key": "invalid_representation_error_key",
    "message": "Representation summands need valid classes and positive multiplicities.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

HYPOTHESIS_VIOLATION_ERROR = {
    "key": "hypothesis_violation_error_key",
    "message": "Fixed dimensions do not drop strictly along the subgroup lattice.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

UNSUPPORTED_FIXED_DIMENSION_ERROR = {
    "key": "unsupported_fixed_dimension_error_key",
    "message": "A proper subgroup has a one-dimensional fixed space.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": DOMAIN_EXIT_CODE,
}

INVALID_POINT_COUNT_ERROR = {
    "key": "invalid_point_count_error_key",
    "message": "The number of configuration points must be at least 1.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

INVALID_DIMENSION_ERROR = {
    "key": "invalid_dimension_error_key",
    "message": "Dimension or degree out of range.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

UNSUPPORTED_FORMAT_ERROR = {
    "key": "unsupported_format_error_key",
    "message": "Output format is not available for this command.",
    "status_code": status.HTTP_400_BAD_REQUEST,
    "exit_code": PARSE_EXIT_CODE,
}

RESOLUTION_GUARD_EXCEEDED_ERROR = {
    "key": "resolution_guard_exceeded_error_key",
    "message": "Injective resolution is longer than the longest subgroup chain allows.",
    "status_code": status.HTTP_500_INTERNAL_SERVER_ERROR,
    "exit_code": DOMAIN_EXIT_CODE,
}

INTERNAL_CONSISTENCY_ERROR = {
    "key": "internal_consistency_error_key",
    "message": "Internal consistency check failed.",
    "status_code": status.HTTP_500_INTERNAL_SERVER_ERROR,
    "exit_code": DOMAIN_EXIT_CODE,
}
