import json
import math
import sys
from typing import Any, List, Optional

import numpy as np
import pandas as pd

from knot_uncertainty.utils.constants import TEXT_SIGNIFICANT_DIGITS
from knot_uncertainty.utils.exceptions import InvalidInput, NonFiniteValue
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)

CSV_HEADER = ['section', 'name', 'source', 'value']
OUTPUT_FORMATS = ('json', 'csv', 'text')


class ReportService:
    """Serialization of bundles, summaries and sweep frames"""

    @staticmethod
    def to_plain(value: Any, path: str = '$') -> Any:
        """numpy scalars to Python, rejecting NaN/Inf anywhere in the tree"""
        if isinstance(value, dict):
            return {key: ReportService.to_plain(item, f'{path}.{key}') for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [ReportService.to_plain(item, f'{path}[{i}]') for i, item in enumerate(value)]
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            if not math.isfinite(value):
                raise NonFiniteValue(f"Non-finite value {value} at {path}")
            return float(value)
        return value

    @staticmethod
    def format_scalar(value: Any) -> str:
        if isinstance(value, float):
            return f"{value:.{TEXT_SIGNIFICANT_DIGITS}g}"
        if value is None:
            return '-'
        return str(value)

    @staticmethod
    def flatten(data: dict) -> List[list]:
        """Rows of (section, name, source, value) for the flat CSV projection"""
        rows = []

        def walk(section, prefix, source, value):
            if isinstance(value, dict):
                for key, item in value.items():
                    if key == 'source':
                        continue
                    walk(section, f'{prefix}.{key}' if prefix else key, value.get('source', source), item)
            elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
                for i, item in enumerate(value):
                    label = item.get('name') or item.get('field') or str(i)
                    if 'commutator' in item:
                        label = f"{label}.{item['commutator']}"
                    walk(section, f'{prefix}.{label}' if prefix else label, item.get('source', source), item)
            elif isinstance(value, list):
                for i, item in enumerate(value):
                    walk(section, f'{prefix}.{i}' if prefix else str(i), source, item)
            else:
                rows.append([section, prefix, source, '' if value is None else value])

        for section, content in data.items():
            if section == 'sigmas' and isinstance(content, dict):
                for source, values in content.items():
                    walk(section, '', source, values)
                continue
            walk(section, '', '', content)
        return rows

    @staticmethod
    def render_json(data: dict) -> str:
        plain = ReportService.to_plain(data)
        return json.dumps(plain, indent=2, allow_nan=False) + '\n'

    @staticmethod
    def render_csv(data: dict) -> str:
        plain = ReportService.to_plain(data)
        frame = pd.DataFrame(ReportService.flatten(plain), columns=CSV_HEADER)
        return frame.to_csv(index=False, lineterminator='\n')

    @staticmethod
    def render_text(data: dict) -> str:
        plain = ReportService.to_plain(data)
        lines = []
        for section, content in plain.items():
            lines.append(f'[{section}]')
            if isinstance(content, list) and content and all(isinstance(item, dict) for item in content):
                frame = pd.DataFrame(content)
                lines.append(frame.to_string(index=False, formatters={
                    column: ReportService.format_scalar for column in frame.columns
                }))
            elif isinstance(content, list):
                lines.extend(f'  {ReportService.format_scalar(item)}' for item in content)
            elif isinstance(content, dict):
                for name, source, value in ((row[1], row[2], row[3]) for row in ReportService.flatten({section: content})):
                    label = f'{name} ({source})' if source else name
                    lines.append(f'  {label}: {ReportService.format_scalar(value)}')
            else:
                lines.append(f'  {ReportService.format_scalar(content)}')
            lines.append('')
        return '\n'.join(lines)

    @staticmethod
    def render(data: dict, output_format: str) -> str:
        if output_format == 'json':
            return ReportService.render_json(data)
        if output_format == 'csv':
            return ReportService.render_csv(data)
        if output_format == 'text':
            return ReportService.render_text(data)
        raise InvalidInput(f"Unknown output format '{output_format}'; use one of {', '.join(OUTPUT_FORMATS)}")

    @staticmethod
    def render_frame(frame: pd.DataFrame, output_format: str) -> str:
        """Sweep rows: CSV keeps full precision, JSON is a list of records"""
        for column in frame.select_dtypes(include='number').columns:
            if not np.all(np.isfinite(frame[column].to_numpy(dtype=float))):
                raise NonFiniteValue(f"Non-finite value in column {column}")

        if output_format == 'csv':
            return frame.to_csv(index=False, lineterminator='\n')
        if output_format == 'json':
            return ReportService.render_json({'rows': frame.to_dict(orient='records')})
        if output_format == 'text':
            if frame.empty:
                return ' '.join(frame.columns) + '\n'
            return frame.to_string(index=False, formatters={
                column: ReportService.format_scalar for column in frame.columns
            }) + '\n'
        raise InvalidInput(f"Unknown output format '{output_format}'; use one of {', '.join(OUTPUT_FORMATS)}")

    @staticmethod
    def write(text: str, out: Optional[str] = None):
        if out:
            with open(out, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
            logger.info(f"Report written to {out}")
        else:
            sys.stdout.write(text)
