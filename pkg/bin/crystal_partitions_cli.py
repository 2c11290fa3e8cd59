#!/usr/bin/env python3

'''
Verification front end for the level 1 partition models
'''

import os
import sys

from crystal_partitions.cli import main

config_file = 'config.yml'
if 'CRYSTAL_PARTITIONS_CONFIG' in os.environ:
    config_file = os.environ['CRYSTAL_PARTITIONS_CONFIG']

sys.exit(main(sys.argv[1:], config_file))
