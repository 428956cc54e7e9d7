import os

import optk
from optk import FEATURES
from optk.app import ConfigError, EmptyDomainError, MissingInputError, write_table, sibling_path
from optk.corpus import read_jsonl, write_jsonl, parse_maildir, filter_corpus
from optk.langfeat import train_lm, load_lexicon, build_feature_matrix, FeatureMatrix
from optk.normalize import normalize_feature, NormalizedMatrix
from optk.graph import build_graph, build_graph_from_pairs, enumerate_triangles, structure_table, StructureTable
from optk.balance import (MODES, parse_sweep, balance_curve, annotate_triads, count_balanced,
                          default_extended_threshold, baseline_check)
from optk.stats import correlation_report, correlation_curves
from optk.export import ExportStyle, export_dot, write_dot, balanced_triads, plot_curves

# fixed artifact names inside the output directory
CORPUS_FILE = 'corpus.jsonl'
FEATURES_FILE = 'features.csv'
NORMALIZED_FILE = 'normalized.csv'
STRUCTURE_FILE = 'structure.csv'
REPORT_FILE = 'report.csv'
GRAPH_FILE = 'graph.dot'
BASELINE_FILE = 'baseline_check.csv'
PLOT_DIR = 'plots'


class OpinionPipeline(optk.Pipeline):
    stochastic_stages = ('simulate',)

    def __init__(self, opt):
        super(OpinionPipeline, self).__init__(opt)
        self.summary.register(['Messages', 'Individuals', 'Pairs'])

    def all_stages(self):
        stages = ['ingest', 'features', 'normalize', 'structure', 'correlate', 'balance', 'export']
        if self.opt.seed is not None:
            stages.append('simulate')
        return stages

    @property
    def running_all(self):
        return self.opt.command == 'all'

    def _in(self, explicit, name):
        # intermediate files always come from the output dir under `all`
        if explicit and not self.running_all:
            return explicit
        return os.path.join(self.root_dir, name)

    def _out(self, name):
        return self.out_path(name, None if self.running_all else self.opt.out)

    def _filtered_corpus(self):
        # every message of a filtered corpus already belongs to a retained pair
        path = self._in(self.opt.corpus.corpus_path, CORPUS_FILE)
        msgs, _ = read_jsonl(path, strict=True)
        msgs, pair_index = filter_corpus(msgs, '', 1)
        if len(pair_index) == 0:
            raise EmptyDomainError(f'corpus {path} holds no mutual interrelationship')
        return msgs, pair_index

    def _plot(self, curves):
        if self.opt.plots:
            paths = plot_curves(curves, os.path.join(self.root_dir, PLOT_DIR))
            self.logger.log('Plot', f'Wrote {len(paths)} figures')

    def stage_ingest(self):
        opt = self.opt.corpus
        if opt.input is None:
            raise ConfigError('ingest needs --input')
        if opt.format == 'maildir':
            fields = tuple(f.strip().lower() for f in opt.recipient_fields.split(',') if f.strip())
            if not fields:
                raise ConfigError('--recipient-fields names no header')
            msgs, report = parse_maildir(opt.input, num_workers=self.opt.num_thread, recipient_fields=fields)
        else:
            msgs, report = read_jsonl(opt.input, strict=self.opt.strict)
        self.logger.log('Ingest', report.summary())
        for record in report.skipped[:20]:
            self.logger.debug('Ingest', f'skipped {record.location}: {record.reason}')

        try:
            kept, pair_index = filter_corpus(msgs, opt.domain_suffix, opt.min_bidirectional)
        except ValueError as e:
            raise ConfigError(str(e))
        if len(pair_index) == 0:
            raise EmptyDomainError(f'no interrelationship of "{opt.domain_suffix}" reaches '
                                   f'{opt.min_bidirectional} messages in each direction')
        self.summary.update({'Messages': len(kept),
                             'Individuals': len(pair_index.individuals()),
                             'Pairs': len(pair_index.unordered_pairs())})
        path = write_jsonl(kept, self._out(CORPUS_FILE))
        self.logger.log('Ingest', f'Wrote {path}')

    def stage_features(self):
        opt = self.opt.langfeat
        if opt.lexicon is None:
            raise MissingInputError('features needs a sentiment lexicon, pass --lexicon')
        lexicon = load_lexicon(opt.lexicon)
        msgs, pair_index = self._filtered_corpus()
        try:
            lm = train_lm(msgs, order=opt.lm_order, k=opt.lm_k, min_count=opt.lm_min_count)
        except ValueError as e:
            raise ConfigError(str(e))
        fm = build_feature_matrix(msgs, pair_index, lm, lexicon, num_workers=self.opt.num_thread)
        self.summary.update({'Pairs': len(pair_index.unordered_pairs())})
        path = fm.to_csv(self._out(FEATURES_FILE))
        self.logger.log('LangFeat', f'Wrote {len(fm)} ordered pairs to {path}')

    def stage_normalize(self):
        fm = FeatureMatrix.from_csv(self._in(self.opt.langfeat.features_path, FEATURES_FILE))
        if len(fm) == 0:
            raise EmptyDomainError('feature table is empty')
        nm = normalize_feature(fm)
        path = nm.to_csv(self._out(NORMALIZED_FILE))
        self.logger.log('Normalize', f'Wrote {len(nm.pairs)} ordered pairs and '
                                     f'{len(nm.unordered_pairs())} asymmetries to {path}')

    def stage_structure(self):
        _, pair_index = self._filtered_corpus()
        g = build_graph(pair_index)
        n_triangles = len(enumerate_triangles(g))
        self.summary.update({'Individuals': g.number_of_vertices(), 'Triangles': n_triangles})
        path = structure_table(g).to_csv(self._out(STRUCTURE_FILE))
        self.logger.log('Structure', f'{g.number_of_vertices()} vertices, {g.number_of_edges()} edges, '
                                     f'{n_triangles} triangles -> {path}')

    def _normalized(self):
        return NormalizedMatrix.from_csv(self._in(self.opt.balance.normalized_path, NORMALIZED_FILE))

    def stage_correlate(self):
        structure = StructureTable.from_csv(self._in(self.opt.stats.structure_path, STRUCTURE_FILE))
        nm = self._normalized()
        report = correlation_report(structure, nm)
        path = report.to_csv(self._out(REPORT_FILE))
        self.logger.log('Stats', f'Pearson r\n{report.as_matrix().to_string()}')
        curves = correlation_curves(structure, nm, bins=self.opt.stats.curve_bins)
        curves.to_csv(sibling_path(path, '_curves'))
        self.logger.log('Stats', f'Wrote {path}')
        self._plot([curves])

    def stage_balance(self):
        opt = self.opt.balance
        sweep = parse_sweep(opt.sweep)
        nm = self._normalized()
        triangles = enumerate_triangles(build_graph_from_pairs(nm.unordered_pairs()))
        if self.running_all:
            jobs = [(mode, feature) for mode in MODES for feature in FEATURES]
        else:
            jobs = [(opt.mode, opt.feature)]

        curves = []
        for mode, feature in jobs:
            try:
                curve = balance_curve(nm, feature, mode, sweep, triangles)
            except EmptyDomainError as e:
                if not self.running_all:
                    raise
                self.logger.warning('Balance', f'{mode} {feature} skipped: {e}')
                continue
            path = curve.to_csv(self._out(f'balance_{mode}_{feature}.csv'))
            self.logger.log('Balance', f'{mode} {feature}: {len(curve)} points -> {path}')
            curves.append(curve)
        self._plot(curves)

    def stage_export(self):
        opt = self.opt.balance
        nm = self._normalized()
        g = build_graph_from_pairs(nm.unordered_pairs())
        triads = enumerate_triangles(g)
        theta_prime = opt.export_theta_prime
        if theta_prime is None:
            theta_prime = default_extended_threshold(nm, opt.feature)
        annotate_triads(triads, nm, opt.feature, opt.export_theta, theta_prime)
        try:
            style = ExportStyle(feature=opt.feature)
        except ValueError as e:
            raise ConfigError(str(e))

        graph_path = self._out(GRAPH_FILE)
        for mode in MODES:
            counts = count_balanced(triads, opt.feature, mode)
            text = export_dot(g, nm, balanced_triads(triads, opt.feature, mode), style)
            path = write_dot(text, sibling_path(graph_path, f'_{mode}', '.dot'))
            self.logger.log('Export', f'{mode}: {counts["balanced"]} of {counts["total"]} balanced -> {path}')

    def stage_simulate(self):
        table = baseline_check(n=self.opt.balance.mc_trials, seed=self.opt.seed)
        path = write_table(table, self._out(BASELINE_FILE))
        worst = max((table['traditional_simulated'] - table['traditional_analytic']).abs().max(),
                    (table['extended_simulated'] - table['extended_analytic']).abs().max())
        self.logger.log('Simulate', f'largest deviation from the analytic baselines {worst:.4f} -> {path}')
