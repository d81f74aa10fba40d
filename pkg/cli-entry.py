#!/usr/bin/env python3

from matchgames.main import cli

cli()
