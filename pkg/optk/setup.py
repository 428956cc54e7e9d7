from setuptools import setup

#############################################################
#############################################################


PACKAGE_NAME = 'optk'
PACKAGES = ['app', 'corpus', 'langfeat', 'normalize', 'graph', 'balance', 'stats', 'export']
INSTALL_REQUIREMENTS = ['numpy',
                        'scipy',
                        'pandas',
                        'networkx',
                        'tqdm',
                        'parse',
                        'colour',
                        'matplotlib']


#############################################################
#############################################################


pkg_name = PACKAGE_NAME
pkgs = [pkg_name] + [f"{pkg_name}.{pkg}" for pkg in PACKAGES]
install_reqs = [req for req in INSTALL_REQUIREMENTS]


setup(
    description='Opinion ToolKit: asymmetric opinions on social interrelationships',
    license='MIT License',
    version='0.1.0',
    name=pkg_name,
    packages=pkgs,
    include_package_data=True,
    install_requires=install_reqs,
    python_requires='>=3.10',
)
