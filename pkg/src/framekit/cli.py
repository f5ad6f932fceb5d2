"""
Command line front end.

Exit codes: 0 yes/success, 1 verified no (or a failed example assertion),
2 usage or data error, 3 unknown.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import catalog, gabor, linalg, matio, rduals
from .errors import FramekitError, NotFrameForH
from .frames import classify, optimal_bounds, standard_basis

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2, 3
VERDICT_EXIT = {'yes': EXIT_OK, 'no': EXIT_NO, 'unknown': EXIT_UNKNOWN}


@dataclass
class RunConfig:
    tau_rank: float = linalg.TAU_RANK
    tau_eq: float = linalg.TAU_EQ
    output: str = 'human'
    seed: int = 0
    dim: int = 8

    def __post_init__(self):
        if self.tau_rank <= 0 or self.tau_eq <= 0:
            raise ValueError('tolerances must be positive')


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError('must be positive')
    return x


def _env_tau_eq():
    text = os.environ.get('FRAMEKIT_TOL')
    if text is None:
        return linalg.TAU_EQ
    try:
        return _positive_float(text)
    except (ValueError, argparse.ArgumentTypeError):
        raise SystemExit('framekit: FRAMEKIT_TOL must be a positive number, got %r' % text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--tau-rank', type=_positive_float, default=None,
                        help='relative rank tolerance (default 1e-10)')
    common.add_argument('--tau-eq', type=_positive_float, default=None,
                        help='relative equality tolerance (default 1e-9, or $FRAMEKIT_TOL)')
    common.add_argument('--format', choices=('human', 'json'), default='human', dest='output')
    common.add_argument('--seed', type=int, default=0)

    parser = argparse.ArgumentParser(prog='framekit', description='R-duals of finite frames.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', parents=[common], help='classify a sequence')
    p.add_argument('file')

    p = sub.add_parser('rdual', parents=[common], help='construct an R-dual')
    p.add_argument('--type', type=int, choices=(1, 2, 3, 4), required=True, dest='dual_type')
    p.add_argument('frame')
    p.add_argument('--e', help='basis E (default: standard basis)')
    p.add_argument('--h', help='basis H (default: standard basis)')
    p.add_argument('--q', help='operator Q for type 3 (default: extended S^1/2)')
    p.add_argument('--extend', action='store_true',
                   help='type 2 on a frame sequence: extend S^1/2 off the span')
    p.add_argument('-o', '--output-file', help='write the dual here instead of stdout')

    p = sub.add_parser('check', parents=[common], help='decide an R-dual relation')
    p.add_argument('--type', type=int, choices=(1, 2, 3), required=True, dest='dual_type')
    p.add_argument('frame')
    p.add_argument('omega')
    p.add_argument('--non-strict', action='store_true',
                   help='report failed hypotheses instead of exiting with an error')
    p.add_argument('--interior', type=int, default=None,
                   help='type 2: test orthonormality on the first K vectors only')

    p = sub.add_parser('gabor', parents=[common], help='finite duality principle report')
    p.add_argument('--L', type=int, required=True, dest='L')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--window', default='gaussian',
                   help='dirac, constant, gaussian, or a matrix file holding the window')

    p = sub.add_parser('example', parents=[common], help='reproduce a classical example')
    p.add_argument('name', choices=catalog.EXAMPLES)
    p.add_argument('--dim', type=int, default=8)
    p.add_argument('--alpha', type=float, default=None)
    return parser


def _config(args):
    tau_eq = args.tau_eq if args.tau_eq is not None else _env_tau_eq()
    tau_rank = args.tau_rank if args.tau_rank is not None else linalg.TAU_RANK
    return RunConfig(tau_rank=tau_rank, tau_eq=tau_eq, output=args.output,
                     seed=args.seed, dim=getattr(args, 'dim', 8))


def _emit(cfg, payload, human, stream=None):
    stream = stream or sys.stdout
    if cfg.output == 'json':
        stream.write(json.dumps(payload, indent=2) + '\n')
    else:
        stream.write(human.rstrip('\n') + '\n')


def cmd_analyze(args, cfg):
    F = matio.load(args.file)
    A, B = optimal_bounds(F, cfg.tau_rank)
    c = classify(F, cfg.tau_rank, cfg.tau_eq)
    summary = linalg.spectral_summary(F, cfg.tau_rank)
    payload = {'classification': c.to_dict(), 'spectral_summary': summary.to_dict()}
    _emit(cfg, payload, '%s\nsingular values: %s' % (
        c.describe(), ' '.join('%.12g' % s for s in summary.singular_values)))
    return EXIT_OK


def _basis_arg(path, D):
    return standard_basis(D) if path is None else matio.load(path)


def cmd_rdual(args, cfg):
    F = matio.load(args.frame)
    D = F.shape[0]
    E, H = _basis_arg(args.e, D), _basis_arg(args.h, D)
    kw = dict(tau_rank=cfg.tau_rank, tau_eq=cfg.tau_eq)
    if args.dual_type == 1:
        Omega = rduals.construct_type1(F, E, H, tau_eq=cfg.tau_eq)
    elif args.dual_type == 2:
        try:
            Omega = rduals.construct_type2(F, E, H, extend=args.extend, **kw)
        except NotFrameForH as exc:
            raise NotFrameForH('%s; pass --extend to use the extended S^1/2' % exc) from None
    elif args.dual_type == 3:
        Q = rduals.extended_sqrt(F, **kw) if args.q is None else matio.load(args.q)
        Omega = rduals.construct_type3(F, E, H, Q, **kw)
    else:
        Omega = rduals.construct_type4(F, E, H, tau_rank=cfg.tau_rank)
    bounds_f = optimal_bounds(F, cfg.tau_rank)
    try:
        bounds_o = optimal_bounds(Omega, cfg.tau_rank)
    except FramekitError:
        bounds_o = (0.0, 0.0)
    info = {'type': args.dual_type, 'bounds_frame': list(bounds_f), 'bounds_dual': list(bounds_o)}
    if args.output_file:
        matio.save(args.output_file, Omega)
        info['output_file'] = args.output_file
        _emit(cfg, info, 'bounds of F: (%.12g, %.12g)\nbounds of dual: (%.12g, %.12g)\nwrote %s'
              % (bounds_f + bounds_o + (args.output_file,)))
    else:
        sys.stdout.write(matio.dumps(Omega) + '\n')
        _emit(cfg, info, 'bounds of F: (%.12g, %.12g)\nbounds of dual: (%.12g, %.12g)'
              % (bounds_f + bounds_o), stream=sys.stderr)
    return EXIT_OK


def cmd_check(args, cfg):
    F, Omega = matio.load(args.frame), matio.load(args.omega)
    kw = dict(tau=cfg.tau_eq, tau_rank=cfg.tau_rank, seed=cfg.seed)
    if args.dual_type == 1:
        report = rduals.check_type1_tight(F, Omega, **kw)
    elif args.dual_type == 2:
        indices = None if args.interior is None else list(range(args.interior))
        report = rduals.check_type2(F, Omega, strict=not args.non_strict, indices=indices, **kw)
    else:
        report = rduals.check_type3(F, Omega, strict=not args.non_strict, **kw)
    lines = ['verdict: %s' % report.verdict]
    for c in report.conditions:
        lines.append('  %-34s %s  (lhs=%.6g, rhs=%.6g)'
                     % (c.name, 'pass' if c.passed else 'FAIL', c.lhs, c.rhs))
    if report.witness is not None:
        lines.append('witness: type %s' % report.witness.dual_type)
    _emit(cfg, report.to_dict(), '\n'.join(lines))
    return VERDICT_EXIT[report.verdict]


def _load_window(source, L):
    if source in gabor.WINDOWS:
        return gabor.window(source, L)
    return np.asarray(matio.load(source)).ravel()


def cmd_gabor(args, cfg):
    g = _load_window(args.window, args.L)
    duality = gabor.duality_check(g, args.L, args.a, args.b, cfg.tau_eq, cfg.tau_rank)
    card = gabor.cardinality_report(g, args.L, args.a, args.b, cfg.tau_rank)
    comm = gabor.commutation_check(g, args.L, args.a, args.b, cfg.tau_eq, cfg.tau_rank)
    payload = {'duality': duality.to_dict(), 'cardinality': card, 'commutation': comm}
    lines = ['lattice L=%d a=%d b=%d, window %s' % (args.L, args.a, args.b, args.window),
             'frame bounds   (%.12g, %.12g)' % duality.frame_bounds,
             'adjoint bounds (%.12g, %.12g)' % duality.adjoint_bounds,
             'spectral distance %.3g, duality verdict %s' % (duality.spectral_distance,
                                                          duality.verdict),
             'counts %d vs %d, kernel %d, adjoint deficit %d'
             % (card['count'], card['adjoint_count'], card['ker_dim'], card['adjoint_deficit']),
             'max relative commutator %.3g (adjoint generators: %s)'
             % (comm['max_relative_commutator'],
                'checked' if comm['integer_oversampled'] else 'not applicable')]
    lines += ['flag: ' + f for f in card['flags']]
    _emit(cfg, payload, '\n'.join(lines))
    return EXIT_OK if duality.verdict and comm['verdict'] else EXIT_NO


def cmd_example(args, cfg):
    if args.dim < 4:
        raise ValueError('--dim must be at least 4')
    rep = catalog.run_example(args.name, args.dim, args.alpha, cfg.seed, tol=cfg.tau_eq)
    lines = ['%s (N=%d)' % (rep.name, rep.dim)]
    for a in rep.assertions:
        lines.append('  [%s] %s: expected %s, got %s' % ('ok' if a['pass'] else 'FAIL', a['name'],
                                                        json.dumps(a['expected']),
                                                        json.dumps(a['actual'])))
    for b in rep.boundary:
        lines.append('  edge  %s: %s' % (b['name'], json.dumps(b['value'])))
    _emit(cfg, rep.to_dict(), '\n'.join(lines))
    if not rep.passed:
        try:
            rep.raise_on_failure()
        except FramekitError as exc:
            sys.stderr.write('framekit: %s\n' % exc)
        return EXIT_NO
    return EXIT_OK


COMMANDS = {'analyze': cmd_analyze, 'rdual': cmd_rdual, 'check': cmd_check,
            'gabor': cmd_gabor, 'example': cmd_example}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except (FramekitError, ValueError, OSError) as exc:
        sys.stderr.write('framekit: %s: %s\n' % (type(exc).__name__, exc))
        return EXIT_ERROR


def run():
    sys.exit(main())
