"""Imaginarity monotones induced by the unified (alpha, beta)-relative entropy."""

from .divergences import (AlphaZParams, EntropyParams, alpha_z_fidelity, h_alpha_beta,
                          lim_branch, renyi_branch, umegaki, unified_relative_entropy)
from .linalg import (EigenSystem, Tolerances, conjugate, dagger, direct_sum, eigh, mat_pow,
                     partial_trace, tensor, trace_product_power, transpose,
                     von_neumann_entropy)
from .monotones import (MEResult, MonotoneParams, OptimizerConfig, lemma3_maximize,
                        m_alpha_z, m_relative_entropy, m_tsallis, me, me_numeric,
                        me_qubit_closed_form, me_spectral, mh, mh_pure, mh_qubit_closed_form,
                        werner_linear_entropy, werner_mh_closed_form)
from .states import (BlochVector, KrausSet, apply_channel, bloch_to_density,
                     density_to_bloch, is_real_state, isotropic, kraus_selective_outcomes,
                     random_density, random_pure, random_real_density, random_real_kraus,
                     remark1_state, state_from_descriptor, werner)

__version__ = "0.1.0"
