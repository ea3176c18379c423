from igen.sgmc.enum import ModelKind, ModelKindEnum, NuisanceKernel, Scheme, SchemeEnum, SchemeFamily


def test_scheme_lookup_by_value():
    assert Scheme.from_value("sghmc10") is Scheme.SGHMC10
    assert Scheme.from_value("MH-HMC") is Scheme.MH_HMC
    assert Scheme.from_value(SchemeEnum.HMC_MARG) is Scheme.HMC_MARG
    assert Scheme.from_value("nuts") is None
    assert Scheme.from_value(None) is None


def test_schemes_keep_report_order():
    assert [scheme.label for scheme in Scheme.SCHEMES] == ["sgHMC-1", "sgHMC-10", "MH+HMC", "HMC-marginalized"]


def test_scheme_families():
    assert Scheme.SGHMC10.is_stochastic_gradient and Scheme.SGHMC10.grad_samples == 10
    assert Scheme.MH_HMC.family is SchemeFamily.COMPOSING
    assert Scheme.HMC_MARG.requires_marginalized
    assert not Scheme.SGHMC1.requires_marginalized


def test_scheme_streams_do_not_overlap():
    offsets = [scheme.stream_offset for scheme in Scheme.SCHEMES]
    assert len(set(offsets)) == len(offsets)
    assert min(b - a for a, b in zip(offsets, offsets[1:])) >= 10_000


def test_model_kind_lookup():
    assert ModelKind.from_value("GMM") is ModelKind.GMM
    assert ModelKind.from_value(ModelKindEnum.HMM) is ModelKind.HMM
    assert ModelKind.from_value("lda") is None
    assert str(ModelKind.SURVEY) == "survey"


def test_twonormals_is_the_only_illustration():
    assert [kind for kind in ModelKind.KINDS if kind.is_illustration] == [ModelKind.TWONORMALS]


def test_nuisance_kernel_values():
    assert NuisanceKernel("gibbs") is NuisanceKernel.GIBBS
    assert NuisanceKernel("mh") is NuisanceKernel.MH
