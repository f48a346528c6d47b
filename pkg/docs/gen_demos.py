"""Plugin for generate the demos page."""

# Import built-in modules
from pathlib import Path

# Import third-party modules
from jinja2 import Template
import mkdocs_gen_files
import stringcase


template = Template(
    r"""
Demos
=====
{% for file_ in Demos.get_demos() %}
{{ Demos.get_name(file_) }}
{{ Demos.get_line(Demos.get_name(file_)) }}
{{ Demos.get_summary(file_) }}

```python
{{ Demos.get_content(file_) }}
```
{% endfor %}

"""
)


class Demos(object):
    def __init__(self, root: Path):
        self._root = root

    def get_demos(self):
        return sorted(self._root.glob("*.py"))

    @staticmethod
    def get_name(file_: Path):
        return stringcase.titlecase(file_.stem)

    @staticmethod
    def get_line(name):
        return "-" * len(name)

    @staticmethod
    def get_summary(file_: Path):
        first = Demos.get_content(file_).splitlines()[0]
        return first.strip('"') if first.startswith('"""') else ""

    @staticmethod
    def get_content(file_: Path):
        return file_.read_text(encoding="utf-8")


def main():
    root = Path(__file__).parent.parent
    with mkdocs_gen_files.open("demos.md", "w") as nav_file:
        nav_file.write(template.render(Demos=Demos(root.joinpath("demos"))))


if __name__ == "<run_path>":
    main()
