# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT
