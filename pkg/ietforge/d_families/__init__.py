from ._10_families import rotation, twisted_reversal, block_swap, \
    half_block_swap, conjugated_rotation, resolve_sigma, build_family, \
    family_name, FamilyInstance, FAMILY_NAMES, NATIVE, UNIT
