"""Desk-scale simulations of language identification and generation in
the limit: fixtures, oracles, learners, generators, and a Monte Carlo
harness for measuring learning curves."""

from .core import (Collection, FixtureMeta, Language, Projection, Sample,
                   critical_indices, finite_language, first_unseen,
                   infinite_language, is_consistent, project)
from .fixtures import FIXTURES, collection_from_sets, dupwrap, make_fixture
from .generate import (Generator, KMState, best_of_both_generate,
                       breadth_via_index, generation_error,
                       km_membership_generate, km_membership_step,
                       km_subset_generate, trivial_generate)
from .harness import (ALGORITHMS, Curve, DistinguishingSet, ExperimentConfig,
                      RateFit, distinguishing_set, estimate_curve,
                      fit_exponential, lower_bound_generation,
                      lower_bound_identification, telltale_bruteforce)
from .identify import (BatchSchedule, batch_majority_identify,
                       canonicalize_index, finite_collection_identify,
                       finlang_identify, gold_pos_neg,
                       pos_neg_exponential_identify, stopping_time_estimate,
                       subset_oracle_identify)
from .mop import (EOS, MACHINES, SupportVerdict, TokenMachine,
                  iterative_bit_discovery, mop_decide, support_bruteforce,
                  token_machine_generator)
from .reductions import (UnambiguityReport, cheating_trainer,
                         identify_via_breadth_generator,
                         identify_via_unambiguous, statistical_to_online,
                         unambiguity_report)
from .sampling import (Enumeration, LabeledDistribution, Stream,
                       ValidDistribution, adversarial_enumeration,
                       canonical_enumeration, canonical_valid_distribution,
                       induced_distribution, labeled_distribution_for,
                       labeled_stream, sample_induced)

__version__ = "0.1.0"
