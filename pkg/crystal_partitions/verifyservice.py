import os
import logging
import logging.config
import time

import humanfriendly
import yaml
try:
    from yaml import CLoader as Loader
except ImportError:
    from yaml import Loader

from crystal_partitions.algebra import Alphabet
from crystal_partitions.crystal import Crystal
from crystal_partitions.models.colourdeletion import INF
from crystal_partitions.models.colourdeletion import SUP
from crystal_partitions.models.colourdeletion import ColourClassification
from crystal_partitions.models.colourdeletion import PhiBijection
from crystal_partitions.models.frobenius import FrobeniusBijection
from crystal_partitions.models.frobenius import FrobeniusModel
from crystal_partitions.models.frobenius import ground_column
from crystal_partitions.models.grounded import ATLEAST
from crystal_partitions.models.grounded import EXACT
from crystal_partitions.models.grounded import GroundedModel
from crystal_partitions.models.grounded import RhoChainModel
from crystal_partitions.models.grounded import RhoModel
from crystal_partitions.models.grounded import omega
from crystal_partitions.models.paths import LambdaBijection
from crystal_partitions.models.paths import PathModel
from crystal_partitions.models.paths import paths_through
from crystal_partitions.models.specialisation import cmpp_check
from crystal_partitions.models.specialisation import conjecture_check
from crystal_partitions.models.specialisation import product_even
from crystal_partitions.models.specialisation import product_level_one
from crystal_partitions.series import inverse_euler


MODELS = ['exact', 'atleast', 'rho', 'frobenius', 'paths']
BIJECTIONS = ['phi', 'frobenius', 'lambda']

DEFAULT_CONFIG = {
    'shards': {'threads': 4},
    'verify': {'truncation': 12, 'specialisation_truncation': 20}
}


def part_label(alphabet, part):
    return '%d_{%s}' % (part.size, alphabet.colour_label(part.colour))


class VerifyService(object):
    '''
    Entry point of the verifications: builds crystals and models from the
    configuration and returns JSON-ready reports.

    :param config_file: YAML configuration, defaults apply when missing
    :type config_file: str
    '''

    def __init__(self, config_file=None):
        self.logger = logging
        self.config = {}
        if config_file and os.path.exists(config_file):
            with open(config_file, 'r') as ymlfile:
                self.config = yaml.load(ymlfile, Loader=Loader) or {}
        for section, values in DEFAULT_CONFIG.items():
            if section not in self.config or not self.config[section]:
                self.config[section] = {}
            for key, value in values.items():
                self.config[section].setdefault(key, value)
        if 'CRYSTAL_PARTITIONS_THREADS' in os.environ:
            self.config['shards']['threads'] = int(os.environ['CRYSTAL_PARTITIONS_THREADS'])

        if 'log_config' in self.config:
            for handler in list(self.config['log_config']['handlers'].keys()):
                self.config['log_config']['handlers'][handler] = dict(self.config['log_config']['handlers'][handler])
            logging.config.dictConfig(self.config['log_config'])
            self.logger = logging.getLogger('crystal_partitions')
        self._crystals = {}

    @property
    def threads(self):
        return self.config['shards']['threads']

    @property
    def truncation(self):
        return self.config['verify']['truncation']

    @property
    def specialisation_truncation(self):
        return self.config['verify']['specialisation_truncation']

    def crystal(self, n):
        if n not in self._crystals:
            self._crystals[n] = Crystal(n)
        return self._crystals[n]

    def get_model(self, name, n, i, truncation):
        '''
        Partition model for the ground b_i of the crystal of rank n

        :param name: one of exact, atleast, rho, frobenius, paths
        :type name: str
        '''
        crystal = self.crystal(n)
        crystal.ground_vertex(i)
        if name == 'exact':
            model = GroundedModel(crystal, i, EXACT, truncation)
        elif name == 'atleast':
            model = GroundedModel(crystal, i, ATLEAST, truncation)
        elif name == 'rho':
            model = RhoModel(crystal, i, truncation)
        elif name == 'frobenius':
            model = FrobeniusModel(crystal.alphabet, ground_column(omega(crystal.alphabet, i)), truncation)
        elif name == 'paths':
            model = PathModel(crystal.alphabet, omega(crystal.alphabet, i), truncation)
        else:
            raise ValueError('Verify:Model:%s:unknown model' % (name))
        model.set_threads(self.threads)
        return model

    def character(self, name, n, i, truncation):
        return self.get_model(name, n, i, truncation).series()

    def verify_energy(self, n):
        '''
        Both energy formulas on every pair of vertices, and the predicted
        value of the comparison rule on every pair of pairs
        '''
        crystal = self.crystal(n)
        report = crystal.verify_energy()
        class_mismatches = 0
        for b in crystal.vertices()[1:]:
            for b2 in crystal.vertices()[1:]:
                if crystal.energy_class(b, b2) != crystal.energy(b, b2):
                    class_mismatches += 1
        report['class_mismatches'] = class_mismatches
        self.logger.info('Verify:Energy:n=%d:Mismatches:%d:ClassMismatches:%d' % (
            n, report['mismatches'], class_mismatches))
        return report

    def verify_models(self, n, truncation):
        '''
        Equality of the exact, rho, Frobenius and path series for every
        ground, atleast = exact / (q; q) and non negative coefficients
        '''
        start = time.time()
        grounds = []
        ok = True
        for i in range(n + 1):
            entry = {'i': i}
            series = dict((name, self.character(name, n, i, truncation)) for name in MODELS)
            reference = series['exact']
            entry['non_negative'] = all(s.is_non_negative() for s in series.values())
            if not entry['non_negative']:
                ok = False
            for name in ['rho', 'frobenius', 'paths']:
                mismatch = reference.first_mismatch(series[name])
                entry[name] = mismatch is None
                if mismatch is not None:
                    ok = False
                    entry[name + '_first_mismatch'] = mismatch
            euler = reference * inverse_euler(truncation, n)
            mismatch = series['atleast'].first_mismatch(euler)
            entry['euler'] = mismatch is None
            if mismatch is not None:
                ok = False
                entry['euler_first_mismatch'] = mismatch
            grounds.append(entry)
        self.logger.info('Verify:Models:n=%d:N=%d:Status:%s:Time:%s' % (
            n, truncation, ok, humanfriendly.format_timespan(time.time() - start)))
        return {'n': n, 'N': truncation, 'status': 'ok' if ok else 'mismatch', 'grounds': grounds}

    def specialize(self, n, i, truncation):
        '''
        Dilated path model against the level one product, and the product
        with the unit vector e_i against the same product
        '''
        alphabet = Alphabet(2 * n)
        model = PathModel(alphabet, omega(alphabet, i), truncation, dilated=True)
        model.set_threads(self.threads)
        lhs = model.series()
        rhs = product_level_one(n, i, truncation)
        k = [0] * (n + 1)
        k[i] = 1
        report = {'n': n, 'i': i, 'N': truncation}
        mismatch = lhs.first_mismatch(rhs)
        report['status'] = 'success' if mismatch is None else 'mismatch'
        if mismatch is not None:
            report['first_mismatch_degree'] = mismatch['q']
            report['lhs_coeff'] = mismatch['lhs_coeff']
            report['rhs_coeff'] = mismatch['rhs_coeff']
        report['product_forms_equal'] = product_even(n, k, truncation) == rhs
        if not report['product_forms_equal']:
            report['status'] = 'mismatch'
        return report

    def cmpp_check(self, n, k, truncation, odd=False):
        report = cmpp_check(n, k, truncation, odd, self.threads)
        self.logger.info('Verify:Cmpp:n=%d:k=%s:Status:%s' % (n, str(k), report['status']))
        return report

    def conjecture_check(self, n, k, truncation, odd=False):
        report = conjecture_check(n, k, truncation, odd, self.threads)
        self.logger.info('Verify:Conjecture:n=%d:k=%s:odd=%s:Status:%s' % (n, str(k), odd, report['status']))
        return report

    def crystal_dot(self, n):
        return self.crystal(n).to_dot()

    def _restricted_colours(self, classes, parts):
        return [part.colour for part in parts if classes.kind(part.colour) in (SUP, INF)]

    def _roundtrip_phi(self, crystal, i, truncation):
        phi = PhiBijection(crystal, i)
        classes = ColourClassification(crystal, i)
        model = GroundedModel(crystal, i, ATLEAST, truncation)
        checked = 0
        failures = []
        for lam in model.iter_partitions():
            checked += 1
            mu, nu = phi.forward(lam)
            back = phi.inverse(mu, nu)
            body = lam[:-1]
            if (back != lam or
                    sum(p.size for p in body) != sum(p.size for p in mu[:-1]) + sum(nu) or
                    len(body) != len(mu) - 1 + len(nu) or
                    self._restricted_colours(classes, body) != self._restricted_colours(classes, mu[:-1]) or
                    not classes.equal_size_runs_ok(body)):
                failures.append(str(lam))
        return checked, failures

    def _roundtrip_frobenius(self, crystal, i, truncation):
        bijection = FrobeniusBijection.for_crystal(crystal, i)
        checked = 0
        failures = []
        for parts in RhoModel(crystal, i, truncation).iter_partitions():
            checked += 1
            mu, nu = bijection.to_frobenius(parts)
            if bijection.from_frobenius(mu, nu) != parts:
                failures.append(str(parts))
        return checked, failures

    def _roundtrip_lambda(self, crystal, i, truncation):
        ground = omega(crystal.alphabet, i)
        bijection = LambdaBijection(crystal.alphabet, ground)
        checked = 0
        failures = []
        for parts in RhoChainModel(crystal.alphabet, ground, truncation).iter_partitions():
            checked += 1
            if bijection.inverse(bijection.forward(parts)) != parts:
                failures.append(str(parts))
        return checked, failures

    def roundtrip(self, n, truncation, bijection):
        '''
        Forward then inverse on every input of size at most N, for all grounds
        '''
        if bijection not in BIJECTIONS:
            raise ValueError('Verify:Roundtrip:%s:unknown bijection' % (bijection))
        crystal = self.crystal(n)
        runner = getattr(self, '_roundtrip_' + bijection)
        checked = 0
        failures = []
        for i in range(n + 1):
            count, failed = runner(crystal, i, truncation)
            checked += count
            failures.extend(failed)
        self.logger.info('Verify:Roundtrip:%s:n=%d:N=%d:Checked:%d:Failures:%d' % (
            bijection, n, truncation, checked, len(failures)))
        report = {'bijection': bijection, 'n': n, 'N': truncation, 'checked': checked, 'failures': len(failures)}
        if failures:
            report['first_failure'] = failures[0]
        return report

    def paths(self, m, part):
        '''
        Every path of the alphabet of size m through part, as labels
        '''
        alphabet = Alphabet(m)
        return [[part_label(alphabet, entry) for entry in path] for path in paths_through(alphabet, part)]
