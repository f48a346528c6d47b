"""Plugin for generate API docs."""

# Import built-in modules
from pathlib import Path

# Import third-party modules
import mkdocs_gen_files


SKIPPED = ("__init__", "__main__", "__version__")


def main():
    nav = mkdocs_gen_files.Nav()
    root = Path(__file__).parent.parent
    api_root = root.joinpath("localization")
    for path in sorted(api_root.glob("**/*.py")):
        module_path = path.relative_to(root).with_suffix("")
        doc_path = path.relative_to(root).with_suffix(".md")
        parts = list(module_path.parts)
        if parts[-1] in SKIPPED:
            continue
        nav_parts = list(parts)
        if nav_parts[-1].startswith("_"):
            nav_parts[-1] = nav_parts[-1][1:]
        nav[nav_parts] = doc_path.as_posix()
        full_doc_path = Path("reference", doc_path).as_posix()
        with mkdocs_gen_files.open(full_doc_path, "w") as fd:
            print("::: " + ".".join(parts), file=fd)

        mkdocs_gen_files.set_edit_path(full_doc_path, path.as_posix())

    with mkdocs_gen_files.open("reference/SUMMARY.md", "w") as nav_file:
        nav_file.writelines(nav.build_literate_nav())


if __name__ == "<run_path>":
    main()
