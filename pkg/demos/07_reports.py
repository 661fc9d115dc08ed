# Per-group reports and the command-line front end.

import json

from gcob.cli import main
from gcob.report import report_for

rep = report_for("Dic_5", genus_max=2, diagnostics=True)
print(json.dumps(rep.to_dict(timing=False), indent=1))

# the same through the CLI
main(["table", "--max-order", "8", "--no-timing"])
main(["compute", "elemab:3,3", "--format", "csv", "--no-timing"])
main(["verify", "quick"])
