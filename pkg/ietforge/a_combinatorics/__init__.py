from ._10_permutation import Permutation, parse_permutation, \
    read_permutation, is_irreducible, cycle_decomposition, is_n_cycle, \
    cycle_length_of
